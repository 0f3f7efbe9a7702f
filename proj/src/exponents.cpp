#include "gzl/exponents.hpp"

#include <stdexcept>

namespace gzl::scaling {

std::vector<ExponentPair> exponent_correlation_dataset(
    const std::vector<std::pair<double, zipf::RankCurve>>& runs,
    uint64_t tail_split_rank) {
  if (runs.size() < 2)
    throw std::invalid_argument("exponent_correlation_dataset: need >= 2 runs");
  std::vector<ExponentPair> rows;
  rows.reserve(runs.size());
  for (const auto& [temperature, curve] : runs) {
    zipf::PowerLawFit fit = zipf::tail_exponent(curve, tail_split_rank);
    ExponentPair row;
    row.temperature = temperature;
    row.zipf_alpha = fit.alpha;
    row.r_squared = fit.r_squared;
    row.rank_lo = fit.rank_lo;
    row.rank_hi = fit.rank_hi;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gzl::scaling
