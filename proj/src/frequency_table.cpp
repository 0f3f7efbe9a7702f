#include "gzl/frequency_table.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "gzl/rng.hpp"

namespace gzl::harness {

namespace {

constexpr char kMagic[8] = {'G', 'Z', 'L', 'F', 'R', 'E', 'Q', '1'};
constexpr uint32_t kVersion = 1;

template <typename T>
void write_pod(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
void read_pod(std::istream& is, T& v) {
  is.read(reinterpret_cast<char*>(&v), sizeof(v));
}

}  // namespace

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(h);
}

FrequencyTable::FrequencyTable(GameId game, RecordMode mode)
    : game_(game), mode_(mode) {}

std::string_view FrequencyTable::key_at(size_t i) const {
  const Entry& e = entry_at(i);
  const char* block = arena_blocks_[e.key_offset / kArenaBlock].get();
  const char* p = block + e.key_offset % kArenaBlock;
  return std::string_view(p + 1, static_cast<uint8_t>(*p));
}

void FrequencyTable::append_key(std::string_view key, Entry& e) {
  size_t need = key.size() + 1;
  if (arena_blocks_.empty() || arena_used_in_last_ + need > kArenaBlock) {
    arena_blocks_.push_back(std::make_unique<char[]>(kArenaBlock));
    arena_used_in_last_ = 0;
  }
  char* p = arena_blocks_.back().get() + arena_used_in_last_;
  *p = static_cast<char>(key.size());
  std::memcpy(p + 1, key.data(), key.size());
  e.key_offset = (arena_blocks_.size() - 1) * kArenaBlock + arena_used_in_last_;
  arena_used_in_last_ += need;
}

void FrequencyTable::grow() {
  size_t new_size = slots_.empty() ? 1024 : slots_.size() * 2;
  std::vector<uint32_t>().swap(slots_);  // release before reallocating
  slots_.assign(new_size, 0);
  uint64_t mask = new_size - 1;
  for (size_t i = 0; i < n_entries_; ++i) {
    uint64_t pos = fnv1a64(key_at(i)) & mask;
    while (slots_[pos] != 0) pos = (pos + 1) & mask;
    slots_[pos] = static_cast<uint32_t>(i + 1);
  }
}

uint64_t FrequencyTable::find_or_insert(std::string_view key) {
  if (key.size() > 255) throw std::invalid_argument("frequency table: key too long");
  if (slots_.empty() || n_entries_ * 3 >= slots_.size() * 2) grow();
  uint64_t mask = slots_.size() - 1;
  uint64_t pos = fnv1a64(key) & mask;
  while (slots_[pos] != 0) {
    uint32_t idx = slots_[pos] - 1;
    if (key_at(idx) == key) return idx;
    pos = (pos + 1) & mask;
  }
  if ((n_entries_ & (kEntryBlock - 1)) == 0)
    entry_blocks_.push_back(std::make_unique<Entry[]>(kEntryBlock));
  Entry& e = entry_ref(n_entries_);
  e = Entry{};
  append_key(key, e);
  n_entries_++;
  slots_[pos] = static_cast<uint32_t>(n_entries_);
  return n_entries_ - 1;
}

void FrequencyTable::record(std::string_view key, uint32_t turn) {
  uint64_t idx = find_or_insert(key);
  Entry& e = entry_ref(idx);
  if (e.count == 0) e.first_seen_turn = turn;
  e.count += 1;
  e.turn_sum += turn;
  e.turn_sq_sum += uint64_t{turn} * turn;
  states_recorded_ += 1;
}

void FrequencyTable::merge(const FrequencyTable& other) {
  if (other.game_ != game_ || other.mode_ != mode_)
    throw std::invalid_argument("frequency table: merging incompatible tables");
  for (size_t i = 0; i < other.n_entries_; ++i) {
    const Entry& oe = other.entry_at(i);
    uint64_t idx = find_or_insert(other.key_at(i));
    Entry& e = entry_ref(idx);
    if (e.count == 0) {
      e.first_seen_turn = oe.first_seen_turn;
    } else {
      e.first_seen_turn = std::min(e.first_seen_turn, oe.first_seen_turn);
    }
    e.count += oe.count;
    e.turn_sum += oe.turn_sum;
    e.turn_sq_sum += oe.turn_sq_sum;
  }
  games_played_ += other.games_played_;
  states_recorded_ += other.states_recorded_;
}

std::vector<uint32_t> FrequencyTable::order_by_key() const {
  std::vector<uint32_t> idx(n_entries_);
  for (uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [this](uint32_t a, uint32_t b) { return key_at(a) < key_at(b); });
  return idx;
}

std::vector<uint32_t> FrequencyTable::order_by_rank() const {
  std::vector<uint32_t> idx(n_entries_);
  for (uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [this](uint32_t a, uint32_t b) {
    uint64_t ca = entry_at(a).count, cb = entry_at(b).count;
    if (ca != cb) return ca > cb;
    return key_at(a) < key_at(b);
  });
  return idx;
}

std::vector<uint32_t> FrequencyTable::top_k_by_rank(size_t k) const {
  std::vector<uint32_t> idx(n_entries_);
  for (uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto cmp = [this](uint32_t a, uint32_t b) {
    uint64_t ca = entry_at(a).count, cb = entry_at(b).count;
    if (ca != cb) return ca > cb;
    return key_at(a) < key_at(b);
  };
  if (k >= idx.size()) {
    std::sort(idx.begin(), idx.end(), cmp);
    return idx;
  }
  std::partial_sort(idx.begin(), idx.begin() + k, idx.end(), cmp);
  idx.resize(k);
  return idx;
}

void FrequencyTable::save(const std::string& path, uint64_t config_digest) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("frequency table: cannot open " + path);
  os.write(kMagic, sizeof(kMagic));
  write_pod(os, kVersion);
  write_pod(os, static_cast<uint8_t>(game_));
  write_pod(os, static_cast<uint8_t>(mode_));
  uint16_t reserved = 0;
  write_pod(os, reserved);
  write_pod(os, config_digest);
  write_pod(os, games_played_);
  write_pod(os, states_recorded_);
  uint64_t n = n_entries_;
  write_pod(os, n);
  for (uint32_t i : order_by_key()) {
    const Entry& e = entry_at(i);
    std::string_view key = key_at(i);
    uint16_t len = static_cast<uint16_t>(key.size());
    write_pod(os, len);
    os.write(key.data(), len);
    write_pod(os, e.count);
    write_pod(os, e.turn_sum);
    write_pod(os, e.turn_sq_sum);
    write_pod(os, e.first_seen_turn);
  }
  if (!os) throw std::runtime_error("frequency table: write failed for " + path);
}

FrequencyTable FrequencyTable::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("frequency table: cannot open " + path);
  char magic[8];
  is.read(magic, sizeof(magic));
  if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("frequency table: bad magic in " + path);
  uint32_t version = 0;
  read_pod(is, version);
  if (version != kVersion)
    throw std::runtime_error("frequency table: unsupported version");
  uint8_t game = 0, mode = 0;
  uint16_t reserved = 0;
  read_pod(is, game);
  read_pod(is, mode);
  read_pod(is, reserved);

  FrequencyTable t(static_cast<GameId>(game), static_cast<RecordMode>(mode));
  read_pod(is, t.config_digest_);
  read_pod(is, t.games_played_);
  read_pod(is, t.states_recorded_);
  uint64_t n = 0;
  read_pod(is, n);
  std::string key;
  for (uint64_t i = 0; i < n; ++i) {
    uint16_t len = 0;
    read_pod(is, len);
    key.resize(len);
    is.read(key.data(), len);
    uint64_t idx = t.find_or_insert(key);
    Entry& e = t.entry_ref(idx);
    read_pod(is, e.count);
    read_pod(is, e.turn_sum);
    read_pod(is, e.turn_sq_sum);
    read_pod(is, e.first_seen_turn);
  }
  if (!is) throw std::runtime_error("frequency table: truncated file " + path);
  return t;
}

void FrequencyTable::write_csv(std::ostream& os) const {
  os << "key_hex,count,mean_turn\n";
  for (uint32_t i : order_by_rank()) {
    const Entry& e = entry_at(i);
    os << key_to_hex(std::string(key_at(i))) << ',' << e.count << ','
       << static_cast<double>(e.turn_sum) / e.count << '\n';
  }
}

bool FrequencyTable::same_entries(const FrequencyTable& other) const {
  if (n_entries_ != other.n_entries_) return false;
  auto a = order_by_key();
  auto b = other.order_by_key();
  for (size_t i = 0; i < a.size(); ++i) {
    if (key_at(a[i]) != other.key_at(b[i])) return false;
    const Entry& ea = entry_at(a[i]);
    const Entry& eb = other.entry_at(b[i]);
    if (ea.count != eb.count || ea.turn_sum != eb.turn_sum ||
        ea.turn_sq_sum != eb.turn_sq_sum ||
        ea.first_seen_turn != eb.first_seen_turn)
      return false;
  }
  return true;
}

}  // namespace gzl::harness
