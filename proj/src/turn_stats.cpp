#include "gzl/turn_stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gzl::harness {

TurnStats turn_statistics(const FrequencyTable& table,
                          const std::vector<uint32_t>& rank_order,
                          uint32_t late_threshold, size_t window) {
  if (table.size() == 0) throw std::invalid_argument("turn_statistics: empty table");
  if (window < 1) throw std::invalid_argument("turn_statistics: window must be >= 1");

  TurnStats out;
  out.late_threshold = late_threshold;
  out.window = window;
  size_t n = rank_order.size();
  out.mean_turn.resize(n);
  out.turn_variance.resize(n);
  out.late_fraction.resize(n);

  for (size_t i = 0; i < n; ++i) {
    const auto& e = table.entry_at(rank_order[i]);
    double mean = static_cast<double>(e.turn_sum) / e.count;
    out.mean_turn[i] = mean;
    out.turn_variance[i] = static_cast<double>(e.turn_sq_sum) / e.count - mean * mean;
  }

  // sliding window centered on each rank, clamped at the ends
  size_t half = window / 2;
  for (size_t i = 0; i < n; ++i) {
    size_t lo = i > half ? i - half : 0;
    size_t hi = std::min(n, i + half + 1);
    size_t late = 0;
    for (size_t j = lo; j < hi; ++j)
      if (out.mean_turn[j] > late_threshold) late++;
    out.late_fraction[i] = static_cast<double>(late) / (hi - lo);
  }
  return out;
}

std::map<int, uint64_t> capture_difference_histogram(const FrequencyTable& table,
                                                     uint64_t min_count) {
  if (table.game() != GameId::Oware && table.game() != GameId::Checkers)
    throw std::invalid_argument(
        "capture_difference_histogram: Oware and Checkers only");
  if (min_count < 1)
    throw std::invalid_argument("capture_difference_histogram: min_count >= 1");

  std::map<int, uint64_t> hist;
  for (size_t i = 0; i < table.size(); ++i) {
    const auto& e = table.entry_at(i);
    if (e.count < min_count) continue;
    auto [c0, c1] = capture_counts_from_key(std::string(table.key_at(i)));
    hist[std::abs(c0 - c1)] += e.count;
  }
  return hist;
}

}  // namespace gzl::harness
