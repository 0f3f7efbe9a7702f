#include "gzl/power_law.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gzl::zipf {

PowerLawFit fit_power_law(const RankCurve& curve, uint64_t rank_lo, uint64_t rank_hi,
                          size_t max_points) {
  if (rank_lo < 1 || rank_hi < rank_lo)
    throw std::invalid_argument("fit_power_law: bad rank range");
  if (rank_hi > curve.size())
    throw std::invalid_argument("fit_power_law: range exceeds curve length");
  if (max_points < 10) throw std::invalid_argument("fit_power_law: max_points < 10");

  // log-uniform grid over [lo, hi], deduplicated
  std::vector<uint64_t> ranks;
  uint64_t span = rank_hi - rank_lo + 1;
  if (span <= max_points) {
    ranks.resize(span);
    std::iota(ranks.begin(), ranks.end(), rank_lo);
  } else {
    double llo = std::log(static_cast<double>(rank_lo));
    double lhi = std::log(static_cast<double>(rank_hi));
    uint64_t prev = 0;
    for (size_t j = 0; j < max_points; ++j) {
      double t = llo + (lhi - llo) * j / (max_points - 1);
      uint64_t r = static_cast<uint64_t>(std::llround(std::exp(t)));
      r = std::clamp<uint64_t>(r, rank_lo, rank_hi);
      if (r != prev) ranks.push_back(r);
      prev = r;
    }
  }
  if (ranks.size() < 10)
    throw std::invalid_argument("fit_power_law: fewer than 10 points");

  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (uint64_t r : ranks) {
    double f = curve.at_rank(r);
    if (!(f > 0))
      throw std::invalid_argument("fit_power_law: nonpositive frequency in range");
    double x = std::log(static_cast<double>(r));
    double y = std::log(f);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  double n = static_cast<double>(ranks.size());
  double cov = sxy - sx * sy / n;
  double var_x = sxx - sx * sx / n;
  double var_y = syy - sy * sy / n;
  if (!(var_x > 0)) throw std::invalid_argument("fit_power_law: degenerate rank range");
  double slope = cov / var_x;

  PowerLawFit fit;
  fit.alpha = -slope;
  fit.log_intercept = (sy - slope * sx) / n;
  fit.r_squared = var_y > 0 ? (cov * cov) / (var_x * var_y) : 1.0;
  fit.rank_lo = rank_lo;
  fit.rank_hi = rank_hi;
  fit.n_points = ranks.size();
  return fit;
}

uint64_t default_fit_hi(const RankCurve& curve, bool include_tail_plateau) {
  if (include_tail_plateau) return curve.size();
  double tail_value = curve.freqs.back();
  size_t i = curve.size();
  while (i > 0 && curve.freqs[i - 1] == tail_value) --i;
  return i;  // 0 when the whole curve is one plateau
}

PowerLawFit tail_exponent(const RankCurve& curve, uint64_t split_rank,
                          bool include_tail_plateau) {
  if (split_rank + 10 >= curve.size())
    throw std::invalid_argument("tail_exponent: insufficient tail");
  uint64_t hi = default_fit_hi(curve, include_tail_plateau);
  if (hi <= split_rank + 10)
    throw std::invalid_argument("tail_exponent: tail is all one plateau");
  return fit_power_law(curve, split_rank + 1, hi);
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
  size_t n = v.size();
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](size_t a, size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("spearman: need two equally sized samples");
  auto rx = average_ranks(x);
  auto ry = average_ranks(y);
  double n = static_cast<double>(x.size());
  double mx = (n + 1) / 2.0;
  double cov = 0, vx = 0, vy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    double dx = rx[i] - mx;
    double dy = ry[i] - mx;
    cov += dx * dy;
    vx += dx * dx;
    vy += dy * dy;
  }
  if (!(vx > 0) || !(vy > 0))
    throw std::invalid_argument("spearman: constant sample");
  return cov / std::sqrt(vx * vy);
}

}  // namespace gzl::zipf
