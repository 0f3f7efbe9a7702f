#pragma once

#include <cstdint>

namespace gzl::scaling {

// Riemann zeta for s > 1, to at least 10 significant digits: direct sum over
// 10^6 terms plus the Euler-Maclaurin integral remainder.
double riemann_zeta(double s);

struct QuantizationParams {
  double alpha = 2.0;    // Zipf exponent of the task-frequency law
  double delta_L = 1.0;  // loss drop per learned quantum
  double L_inf = 0.0;    // irreducible loss
  double capacity = 1.0; // parameters per quantum

  void validate() const;
};

// Expected loss after learning the n most frequent quanta, as written:
//   L(n) = delta_L / (alpha * zeta(alpha + 1)) * n^(1 - alpha) + L_inf.
// Errors for alpha == 1 (the formula degenerates). Note that the independent
// tail-sum route below decays as n^-alpha, not n^(1-alpha); both are exposed
// so the disagreement stays visible.
double expected_loss_quanta(uint64_t n, const QuantizationParams& q);

// Independent tail-sum route: unlearned quanta keep their per-quantum loss,
//   L(n) ~= delta_L * sum_{k=n+1}^{cutoff} k^-(alpha+1) / zeta(alpha+1) + L_inf,
// with the truncated mass bracketed by integral bounds.
struct BruteForceLoss {
  double value = 0;          // truncated estimate
  double remainder_lo = 0;   // additional loss of the ignored tail, lower bound
  double remainder_hi = 0;   // and upper bound
};
BruteForceLoss brute_force_quanta_loss(uint64_t n, const QuantizationParams& q,
                                       uint64_t cutoff);

// alpha_N = alpha - 1: the size-scaling exponent implied by a Zipf exponent.
double size_scaling_exponent(double zipf_alpha);

// Elo = 400 * log10(gamma) + anchor, and its inverse.
double elo_from_gamma(double gamma, double anchor = 0.0);
double gamma_from_elo(double elo, double anchor = 0.0);

}  // namespace gzl::scaling
