#pragma once

#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "gzl/frequency_table.hpp"
#include "gzl/game.hpp"
#include "gzl/mcts.hpp"
#include "gzl/observation.hpp"
#include "gzl/policy.hpp"

namespace gzl::harness {

enum class PolicyKind : uint8_t { Uniform = 0, Biased = 1, Mcts = 2 };

enum class RecordModeOption : uint8_t {
  Auto = 0,  // Reached for ToyIdeal (matches its per-turn distribution), Acting otherwise
  Acting = 1,
  Reached = 2,
};

struct HarnessConfig {
  GameId game = GameId::ConnectFour;
  std::optional<ToyParams> toy;  // required iff game == ToyIdeal
  PolicyKind policy = PolicyKind::Uniform;
  search::SearchConfig search;  // used by the Mcts policy
  uint64_t num_games = 1;
  uint64_t seed = 0;
  int workers = 1;
  uint32_t ply_cap = 1'000'000;  // safety net; the game rules terminate first
  RecordModeOption record = RecordModeOption::Auto;

  void validate() const;
  RecordMode effective_record_mode() const;
  uint64_t digest() const;  // stable across worker counts
};

struct StateRecord {
  ObservationKey key;
  uint32_t turn = 0;  // 1-based position in the trajectory
  std::pair<int, int> captures{0, 0};
};

struct Trajectory {
  std::vector<StateRecord> records;
  Outcome result;  // Ongoing when the ply cap cut the game short
};

// One full game under `policy`. Records one state per ply: in Acting mode the
// state the move was chosen from, in Reached mode the state the move led to.
Trajectory play_game(const GameState& initial, const search::Policy& policy,
                     RecordMode mode, uint32_t ply_cap, std::mt19937_64& rng);

std::unique_ptr<search::Policy> make_policy(const HarnessConfig& cfg);

// Frequency table over all states visited across cfg.num_games games. Game i
// draws its own RNG stream from (seed, i), so the result is identical for any
// worker count.
FrequencyTable run_selfplay(const HarnessConfig& cfg);

// Single-threaded slice over game indices [game_lo, game_hi).
FrequencyTable run_selfplay_range(const HarnessConfig& cfg, uint64_t game_lo,
                                  uint64_t game_hi);

}  // namespace gzl::harness
