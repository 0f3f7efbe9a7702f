#pragma once

#include <cstdint>

#include "gzl/rank_curve.hpp"

namespace gzl::zipf {

// Least-squares line on (ln n, ln S(n)); alpha is the negated slope of
// S(n) ~ n^-alpha. Ranks are 1-indexed here.
struct PowerLawFit {
  double alpha = 0;
  double log_intercept = 0;
  double r_squared = 0;
  uint64_t rank_lo = 0;
  uint64_t rank_hi = 0;
  size_t n_points = 0;
};

// Fits over ranks [lo, hi] after log-uniform rank resampling (at most
// max_points ranks, deduplicated), so dense high ranks do not dominate the
// regression. Requires >= 10 usable points and positive frequencies in range.
PowerLawFit fit_power_law(const RankCurve& curve, uint64_t rank_lo, uint64_t rank_hi,
                          size_t max_points = 256);

// Last rank before the trailing all-equal plateau (the finite-data tail);
// curve.size() when include_tail_plateau is set.
uint64_t default_fit_hi(const RankCurve& curve, bool include_tail_plateau = false);

// Fit restricted to ranks > split_rank, up to default_fit_hi.
PowerLawFit tail_exponent(const RankCurve& curve, uint64_t split_rank,
                          bool include_tail_plateau = false);

// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace gzl::zipf
