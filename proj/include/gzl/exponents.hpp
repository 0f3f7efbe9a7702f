#pragma once

#include <optional>
#include <vector>

#include "gzl/power_law.hpp"
#include "gzl/rank_curve.hpp"

namespace gzl::scaling {

// One row of the exponent-correlation dataset: the tail Zipf exponent of a
// temperature run, paired with a size-scaling exponent when one is available
// from an external source (none can be produced here, so the column ships
// flagged "external" unless the caller fills it).
struct ExponentPair {
  double temperature = 0;
  double zipf_alpha = 0;  // tail-restricted fit
  double r_squared = 0;
  uint64_t rank_lo = 0;
  uint64_t rank_hi = 0;
  std::optional<double> scaling_alpha_N;  // nullopt = external
};

std::vector<ExponentPair> exponent_correlation_dataset(
    const std::vector<std::pair<double, zipf::RankCurve>>& runs,
    uint64_t tail_split_rank);

}  // namespace gzl::scaling
