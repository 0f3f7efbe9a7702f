#include "gzl/rank_curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace gzl::zipf {

RankCurve rank_curve(const harness::FrequencyTable& table, uint64_t min_count) {
  if (table.size() == 0) throw std::invalid_argument("rank_curve: empty table");
  RankCurve curve;
  curve.freqs.reserve(table.size());
  for (size_t i = 0; i < table.size(); ++i) {
    uint64_t c = table.entry_at(i).count;
    if (c >= min_count) curve.freqs.push_back(static_cast<double>(c));
  }
  if (curve.freqs.empty())
    throw std::invalid_argument("rank_curve: min_count filtered out every entry");
  std::sort(curve.freqs.begin(), curve.freqs.end(), std::greater<double>());
  for (double f : curve.freqs) curve.total += f;
  return curve;
}

RankCurve rank_curve(const harness::FrequencyTable& table) {
  return rank_curve(table, 1);
}

RankCurve make_curve(std::vector<double> freqs) {
  if (freqs.empty()) throw std::invalid_argument("make_curve: empty input");
  RankCurve curve;
  curve.freqs = std::move(freqs);
  std::sort(curve.freqs.begin(), curve.freqs.end(), std::greater<double>());
  for (double f : curve.freqs) {
    if (!(f >= 0)) throw std::invalid_argument("make_curve: negative frequency");
    curve.total += f;
  }
  if (!(curve.total > 0)) throw std::invalid_argument("make_curve: total must be > 0");
  return curve;
}

}  // namespace gzl::zipf
