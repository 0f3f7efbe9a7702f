#include "gzl/quantization.hpp"

#include <cmath>
#include <stdexcept>

namespace gzl::scaling {

double riemann_zeta(double s) {
  if (!(s > 1)) throw std::invalid_argument("riemann_zeta: requires s > 1");
  const int terms = 1'000'000;
  double sum = 0;
  for (int k = terms; k >= 1; --k) sum += std::pow(k, -s);
  // Euler-Maclaurin remainder: integral + half term + first Bernoulli term
  double nd = static_cast<double>(terms);
  double tail = std::pow(nd, 1 - s) / (s - 1) - 0.5 * std::pow(nd, -s) +
                s / 12.0 * std::pow(nd, -s - 1);
  return sum + tail;
}

void QuantizationParams::validate() const {
  if (!(alpha > 0)) throw std::invalid_argument("quantization: alpha must be > 0");
  if (!(delta_L > 0)) throw std::invalid_argument("quantization: delta_L must be > 0");
  if (L_inf < 0) throw std::invalid_argument("quantization: L_inf must be >= 0");
  if (!(capacity > 0)) throw std::invalid_argument("quantization: capacity must be > 0");
}

double expected_loss_quanta(uint64_t n, const QuantizationParams& q) {
  q.validate();
  if (n < 1) throw std::invalid_argument("expected_loss_quanta: n must be >= 1");
  if (q.alpha == 1.0)
    throw std::invalid_argument(
        "expected_loss_quanta: alpha = 1 is degenerate (logarithmic regime)");
  double nd = static_cast<double>(n);
  return q.delta_L / (q.alpha * riemann_zeta(q.alpha + 1)) *
             std::pow(nd, 1.0 - q.alpha) +
         q.L_inf;
}

BruteForceLoss brute_force_quanta_loss(uint64_t n, const QuantizationParams& q,
                                       uint64_t cutoff) {
  q.validate();
  if (cutoff < 10 * n || cutoff < 1)
    throw std::invalid_argument("brute_force_quanta_loss: cutoff must be >= 10n and >= 1");
  double z = riemann_zeta(q.alpha + 1);
  double tail = 0;
  for (uint64_t k = cutoff; k > n; --k)
    tail += std::pow(static_cast<double>(k), -(q.alpha + 1.0));

  // mass past the cutoff: int_{cutoff+1}^inf x^-(a+1) dx <= R <= int_cutoff^inf
  double a = q.alpha;
  double rem_lo = std::pow(static_cast<double>(cutoff) + 1.0, -a) / a;
  double rem_hi = std::pow(static_cast<double>(cutoff), -a) / a;

  BruteForceLoss out;
  out.value = q.delta_L * tail / z + q.L_inf;
  out.remainder_lo = q.delta_L * rem_lo / z;
  out.remainder_hi = q.delta_L * rem_hi / z;
  return out;
}

double size_scaling_exponent(double zipf_alpha) {
  if (!std::isfinite(zipf_alpha))
    throw std::invalid_argument("size_scaling_exponent: non-finite input");
  return zipf_alpha - 1.0;
}

double elo_from_gamma(double gamma, double anchor) {
  if (!(gamma > 0)) throw std::invalid_argument("elo_from_gamma: gamma must be > 0");
  return 400.0 * std::log10(gamma) + anchor;
}

double gamma_from_elo(double elo, double anchor) {
  return std::pow(10.0, (elo - anchor) / 400.0);
}

}  // namespace gzl::scaling
