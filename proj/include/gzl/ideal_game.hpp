#pragma once

#include <cstdint>

namespace gzl::zipf {

// Closed-form rank-frequency distribution of the constant-branching toy game:
// b branches per turn, K turns, every state reachable by exactly one move
// sequence. Ranks are ZERO-indexed here (plateau_start(1, b) == 0); power-law
// fitting elsewhere uses 1-indexed ranks.

// First rank of plateau t (turn number t >= 1): (b^t - b)/(b - 1).
uint64_t plateau_start(int t, int b);

// Turn number of the state at rank n; the plateau holding rank n.
int plateau_of_rank(uint64_t n, int b, int K);

// Total number of distinct states: (b^(K+1) - b)/(b - 1).
uint64_t ideal_state_count(int b, int K);

// Probability that a state drawn uniformly from the states visited by one
// random game is the rank-n state: (1/K) * b^(-t(n)).
double ideal_probability(uint64_t n, int b, int K);

// Exhaustive verification that (1/K)/((b-1)n + b) <= P(n) < (1/K)*b/((b-1)n + b)
// at every rank, with the lower bound met exactly at plateau starts.
struct BoundsReport {
  uint64_t ranks_checked = 0;
  uint64_t violations = 0;
  double max_violation = 0;       // largest overshoot past either bound
  double min_lower_margin = 0;    // min over n of P(n) - lower(n)
  double min_upper_margin = 0;    // min over n of upper(n) - P(n)
  uint64_t lower_equality_count = 0;  // ranks where P(n) == lower(n) exactly
};

BoundsReport bounds_check(int b, int K);

}  // namespace gzl::zipf
