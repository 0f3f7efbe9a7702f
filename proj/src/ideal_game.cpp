#include "gzl/ideal_game.hpp"

#include <limits>
#include <stdexcept>

namespace gzl::zipf {

namespace {

constexpr uint64_t kMaxStates = 10'000'000;

void check_params(int b, int K) {
  if (b < 2) throw std::invalid_argument("ideal game: branching factor must be >= 2");
  if (K < 1) throw std::invalid_argument("ideal game: game length must be >= 1");
}

// b^t saturated at 2^63, enough to validate ranks below any practical bound.
uint64_t pow_saturated(uint64_t b, int t) {
  uint64_t r = 1;
  const uint64_t cap = uint64_t{1} << 63;
  for (int i = 0; i < t; ++i) {
    if (r >= cap / b) return cap;
    r *= b;
  }
  return r;
}

}  // namespace

uint64_t plateau_start(int t, int b) {
  if (t < 1) throw std::invalid_argument("plateau_start: t must be >= 1");
  if (b < 2) throw std::invalid_argument("plateau_start: b must be >= 2");
  uint64_t bt = pow_saturated(b, t);
  if (bt == (uint64_t{1} << 63))
    throw std::invalid_argument("plateau_start: rank overflows");
  return (bt - b) / (b - 1);
}

uint64_t ideal_state_count(int b, int K) {
  check_params(b, K);
  uint64_t top = pow_saturated(b, K + 1);
  if (top == (uint64_t{1} << 63))
    throw std::invalid_argument("ideal game: state space too large");
  return (top - b) / (b - 1);
}

int plateau_of_rank(uint64_t n, int b, int K) {
  check_params(b, K);
  // n belongs to plateau t iff start(t) <= n < start(t+1); walk plateaus with
  // exact integer arithmetic, saturating once past any representable rank.
  const uint64_t cap = uint64_t{1} << 62;
  uint64_t bt = static_cast<uint64_t>(b);  // b^t
  for (int t = 1; t <= K; ++t) {
    uint64_t next_start = bt >= cap / b
                              ? std::numeric_limits<uint64_t>::max()
                              : (bt * b - b) / (b - 1);
    if (n < next_start) return t;
    bt *= b;
  }
  throw std::invalid_argument("plateau_of_rank: rank out of range");
}

double ideal_probability(uint64_t n, int b, int K) {
  check_params(b, K);
  int t = plateau_of_rank(n, b, K);  // throws when n is past the last plateau
  double bt = 1;
  for (int i = 0; i < t; ++i) bt *= b;
  return 1.0 / (static_cast<double>(K) * bt);
}

BoundsReport bounds_check(int b, int K) {
  check_params(b, K);
  uint64_t total = ideal_state_count(b, K);
  if (total > kMaxStates)
    throw std::invalid_argument("bounds_check: state count exceeds 1e7");

  BoundsReport report;
  report.min_lower_margin = std::numeric_limits<double>::infinity();
  report.min_upper_margin = std::numeric_limits<double>::infinity();

  double kd = static_cast<double>(K);
  uint64_t n = 0;
  double bt = 1;
  for (int t = 1; t <= K; ++t) {
    bt *= b;  // exact: bt <= b * kMaxStates < 2^53
    double p = 1.0 / (kd * bt);
    uint64_t width = static_cast<uint64_t>(bt);
    for (uint64_t i = 0; i < width; ++i, ++n) {
      double line = static_cast<double>((b - 1) * n + b);
      double lower = 1.0 / (kd * line);
      double upper = static_cast<double>(b) / (kd * line);
      if (p < lower) {
        report.violations++;
        report.max_violation = std::max(report.max_violation, lower - p);
      }
      if (p >= upper) {
        report.violations++;
        report.max_violation = std::max(report.max_violation, p - upper);
      }
      report.min_lower_margin = std::min(report.min_lower_margin, p - lower);
      report.min_upper_margin = std::min(report.min_upper_margin, upper - p);
      if (p == lower) report.lower_equality_count++;
    }
  }
  report.ranks_checked = n;
  return report;
}

}  // namespace gzl::zipf
