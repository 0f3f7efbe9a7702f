#pragma once

// Test-only oracles, deliberately independent of the library implementations
// they check: exhaustive enumeration for the toy-game distribution, plain
// recursive negamax and retrograde DP for the solver, and a long partial sum
// for zeta.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gzl/connect4_board.hpp"

namespace oracles {

// Enumerates every length-K branch sequence of the b-ary toy game and counts
// each visited prefix once per game; returns per-state probabilities sorted
// descending. P(state) = count / (K * b^K).
inline std::vector<double> toy_distribution_by_enumeration(int b, int K) {
  std::map<std::string, uint64_t> counts;
  std::vector<int> seq(K, 0);
  uint64_t games = 1;
  for (int i = 0; i < K; ++i) games *= b;
  for (uint64_t g = 0; g < games; ++g) {
    uint64_t x = g;
    for (int i = 0; i < K; ++i) {
      seq[i] = static_cast<int>(x % b);
      x /= b;
    }
    std::string prefix;
    for (int i = 0; i < K; ++i) {
      prefix.push_back(static_cast<char>(seq[i]));
      counts[prefix]++;
    }
  }
  std::vector<double> probs;
  probs.reserve(counts.size());
  double total = static_cast<double>(K) * games;
  for (const auto& [state, c] : counts) probs.push_back(c / total);
  std::sort(probs.begin(), probs.end(), std::greater<double>());
  return probs;
}

// Riemann zeta by raw partial sum plus the integral remainder only.
inline double zeta_partial_sum(double s, uint64_t terms = 10'000'000) {
  double sum = 0;
  for (uint64_t k = terms; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  return sum + std::pow(static_cast<double>(terms), 1 - s) / (s - 1);
}

// Plain recursive negamax on the Connect Four bitboard: no pruning, no
// transposition table. `position` is the mover's stones.
struct PlainNegamax {
  int width, height, stride;
  uint64_t board_mask, bottom_mask;
  uint64_t nodes = 0;

  explicit PlainNegamax(const gzl::c4::Board& b)
      : width(b.width), height(b.height), stride(b.height + 1) {
    board_mask = b.full_mask();
    bottom_mask = 0;
    for (int c = 0; c < width; ++c) bottom_mask |= b.bottom_bit(c);
  }

  bool has_line(uint64_t s) const {
    for (int shift : {1, stride - 1, stride, stride + 1}) {
      uint64_t m = s & (s >> shift);
      if (m & (m >> (2 * shift))) return true;
    }
    return false;
  }

  int value(uint64_t position, uint64_t mask) {
    nodes++;
    if (mask == board_mask) return 0;
    uint64_t playable = (mask + bottom_mask) & board_mask;
    int best = -1;
    for (int c = 0; c < width; ++c) {
      uint64_t move = playable & (((uint64_t{1} << height) - 1) << (c * stride));
      if (!move) continue;
      if (has_line(position | move)) return 1;
      best = std::max(best, -value(position ^ mask, mask | move));
    }
    return best;
  }

  // exact value and optimal actions from a board + mover
  std::pair<int, std::vector<int>> solve(const gzl::c4::Board& b, int to_move) {
    uint64_t mask = b.mask();
    uint64_t mine = b.stones[to_move];
    uint64_t theirs = b.stones[1 - to_move];
    if (has_line(theirs)) return {-1, {}};
    if (has_line(mine)) return {1, {}};
    if (mask == board_mask) return {0, {}};
    uint64_t playable = (mask + bottom_mask) & board_mask;
    std::vector<std::pair<int, int>> vals;
    int best = -2;
    for (int c = 0; c < width; ++c) {
      uint64_t move = playable & (((uint64_t{1} << height) - 1) << (c * stride));
      if (!move) continue;
      int v = has_line(mine | move) ? 1 : -value(theirs, mask | move);
      vals.emplace_back(c, v);
      best = std::max(best, v);
    }
    std::vector<int> optimal;
    for (auto [c, v] : vals)
      if (v == best) optimal.push_back(c);
    return {best, optimal};
  }
};

}  // namespace oracles
