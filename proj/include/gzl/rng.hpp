#pragma once

#include <cstdint>
#include <random>

namespace gzl {

// splitmix64: used to whiten seeds and derive independent per-game streams.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic stream for game #index under a master seed. Results are
// independent of how games are scheduled across workers.
inline std::mt19937_64 game_stream(uint64_t master_seed, uint64_t index) {
  uint64_t s = splitmix64(splitmix64(master_seed) ^ (0x517cc1b727220a95ULL * (index + 1)));
  return std::mt19937_64(s);
}

// Unbiased integer in [0, n). Avoids std::uniform_int_distribution, whose
// output differs between standard libraries.
inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t n) {
  uint64_t threshold = (0 - n) % n;
  for (;;) {
    uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

inline double uniform_unit(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

}  // namespace gzl
