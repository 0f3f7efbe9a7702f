#pragma once

#include <vector>

#include "gzl/frequency_table.hpp"

namespace gzl::zipf {

// Frequencies sorted descending (ties in the underlying table break by
// ascending key bytes). Stored as doubles so synthetic curves fit exactly.
struct RankCurve {
  std::vector<double> freqs;
  double total = 0;

  size_t size() const { return freqs.size(); }
  double at_rank(uint64_t rank) const { return freqs[rank - 1]; }  // 1-indexed
};

RankCurve rank_curve(const harness::FrequencyTable& table);
// Drops entries with count < min_count before ranking.
RankCurve rank_curve(const harness::FrequencyTable& table, uint64_t min_count);

// Sorts the given frequencies descending; for synthetic inputs and tests.
RankCurve make_curve(std::vector<double> freqs);

}  // namespace gzl::zipf
