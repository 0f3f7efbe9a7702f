#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gzl/frequency_table.hpp"

namespace gzl::harness {

// Per-rank turn statistics; index i describes the state of rank i+1.
struct TurnStats {
  std::vector<double> mean_turn;
  std::vector<double> turn_variance;
  std::vector<double> late_fraction;  // sliding-window fraction with mean turn > threshold
  uint32_t late_threshold = 0;
  size_t window = 0;
};

// rank_order comes from FrequencyTable::order_by_rank (or a prefix of it).
TurnStats turn_statistics(const FrequencyTable& table,
                          const std::vector<uint32_t>& rank_order,
                          uint32_t late_threshold, size_t window = 101);

// Histogram of |captures(p0) - captures(p1)| -> total visit count over all
// entries with count >= min_count. min_count = 2 drops the one-time tail.
// Oware and Checkers tables only.
std::map<int, uint64_t> capture_difference_histogram(const FrequencyTable& table,
                                                     uint64_t min_count = 1);

}  // namespace gzl::harness
