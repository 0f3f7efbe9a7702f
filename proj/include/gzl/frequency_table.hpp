#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gzl/game.hpp"
#include "gzl/observation.hpp"

namespace gzl::harness {

enum class RecordMode : uint8_t {
  Acting = 0,   // states the agent acts from: initial included, terminal not
  Reached = 1,  // states reached by each move: terminal included, initial not
};

// Accumulator from observation key to visit statistics. Keys are stored in a
// private arena with an open-addressing index, which keeps memory near
// 60 bytes per unique state; arena and entries grow in fixed-size blocks so
// 10^8-entry tables never need a doubling copy of multi-GB buffers.
class FrequencyTable {
 public:
  struct Entry {
    uint64_t key_offset = 0;  // arena offset of [len u8][key bytes]
    uint64_t count = 0;
    uint64_t turn_sum = 0;
    uint64_t turn_sq_sum = 0;
    uint32_t first_seen_turn = 0;
  };

  FrequencyTable() = default;
  explicit FrequencyTable(GameId game, RecordMode mode = RecordMode::Acting);

  void record(std::string_view key, uint32_t turn);
  void merge(const FrequencyTable& other);

  size_t size() const { return n_entries_; }
  std::string_view key_at(size_t i) const;
  const Entry& entry_at(size_t i) const {
    return entry_blocks_[i >> kEntryBlockLog][i & (kEntryBlock - 1)];
  }

  // Entry indices ordered by ascending key bytes.
  std::vector<uint32_t> order_by_key() const;
  // Entry indices in rank order: count descending, ties by ascending key.
  std::vector<uint32_t> order_by_rank() const;
  // First k indices of order_by_rank without sorting the whole table.
  std::vector<uint32_t> top_k_by_rank(size_t k) const;

  GameId game() const { return game_; }
  RecordMode record_mode() const { return mode_; }
  uint64_t games_played() const { return games_played_; }
  uint64_t states_recorded() const { return states_recorded_; }
  void add_games_played(uint64_t n) { games_played_ += n; }

  void save(const std::string& path, uint64_t config_digest = 0) const;
  static FrequencyTable load(const std::string& path);
  uint64_t saved_config_digest() const { return config_digest_; }

  // CSV export: key_hex, count, mean_turn; rows in rank order.
  void write_csv(std::ostream& os) const;

  bool same_entries(const FrequencyTable& other) const;

 private:
  static constexpr size_t kArenaBlock = 1 << 24;    // 16 MiB of key bytes
  static constexpr size_t kEntryBlockLog = 20;      // 2^20 entries per block
  static constexpr size_t kEntryBlock = size_t{1} << kEntryBlockLog;

  uint64_t find_or_insert(std::string_view key);
  void grow();
  Entry& entry_ref(size_t i) {
    return entry_blocks_[i >> kEntryBlockLog][i & (kEntryBlock - 1)];
  }
  void append_key(std::string_view key, Entry& e);

  GameId game_ = GameId::ConnectFour;
  RecordMode mode_ = RecordMode::Acting;
  uint64_t games_played_ = 0;
  uint64_t states_recorded_ = 0;
  uint64_t config_digest_ = 0;  // populated by load()

  std::vector<std::unique_ptr<char[]>> arena_blocks_;
  size_t arena_used_in_last_ = 0;  // bytes used in the newest arena block
  size_t n_entries_ = 0;
  std::vector<std::unique_ptr<Entry[]>> entry_blocks_;
  std::vector<uint32_t> slots_;  // entry index + 1, 0 = empty
};

uint64_t fnv1a64(std::string_view bytes);

}  // namespace gzl::harness
