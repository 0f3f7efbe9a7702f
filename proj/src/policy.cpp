#include "gzl/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gzl/rng.hpp"

namespace gzl::search {

void PolicyDistribution::validate() const {
  if (actions.size() != probs.size())
    throw std::invalid_argument("policy: actions/probs size mismatch");
  double sum = 0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw std::invalid_argument("policy: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("policy: probabilities must sum to 1");
}

Action PolicyDistribution::sample(std::mt19937_64& rng) const {
  double u = uniform_unit(rng);
  double acc = 0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return actions[i];
  }
  return actions.back();
}

std::vector<double> temperature_weights(const std::vector<double>& counts,
                                        double temperature) {
  if (counts.empty()) throw std::invalid_argument("temperature_policy: empty counts");
  if (temperature < 0) throw std::invalid_argument("temperature_policy: T must be >= 0");
  double max_count = *std::max_element(counts.begin(), counts.end());
  if (!(max_count > 0)) throw std::invalid_argument("temperature_policy: all counts zero");

  std::vector<double> probs(counts.size(), 0.0);
  if (temperature == 0) {
    // one-hot on the max count, lowest index wins ties
    for (size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] == max_count) {
        probs[i] = 1.0;
        break;
      }
    }
    return probs;
  }

  // exponent-shifted log space: exp((ln N_a - ln N_max)/T) never overflows
  double log_max = std::log(max_count);
  double sum = 0;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) {
      probs[i] = std::exp((std::log(counts[i]) - log_max) / temperature);
      sum += probs[i];
    }
  }
  for (double& p : probs) p /= sum;
  return probs;
}

PolicyDistribution temperature_policy(const std::vector<Action>& actions,
                                      const std::vector<double>& counts,
                                      double temperature) {
  if (actions.size() != counts.size())
    throw std::invalid_argument("temperature_policy: actions/counts size mismatch");
  PolicyDistribution pi;
  pi.actions = actions;
  pi.probs = temperature_weights(counts, temperature);
  return pi;
}

CompositeLoss composite_loss(double z, double v, const std::vector<double>& pi,
                             const std::vector<double>& p) {
  if (pi.size() != p.size())
    throw std::invalid_argument("composite_loss: pi/p size mismatch");
  CompositeLoss out;
  out.value_loss = (z - v) * (z - v);
  for (size_t i = 0; i < pi.size(); ++i) {
    if (pi[i] > 0) {
      if (!(p[i] > 0))
        throw std::invalid_argument("composite_loss: p must be positive where pi > 0");
      out.policy_loss -= pi[i] * std::log(p[i]);
    }
  }
  out.total = out.value_loss + out.policy_loss;
  return out;
}

std::optional<double> optimal_move_probability(const PolicyDistribution& pi,
                                               const std::vector<Action>& optimal_set) {
  if (optimal_set.empty()) return std::nullopt;
  double mass = 0;
  for (size_t i = 0; i < pi.actions.size(); ++i) {
    if (std::find(optimal_set.begin(), optimal_set.end(), pi.actions[i]) !=
        optimal_set.end())
      mass += pi.probs[i];
  }
  return mass;
}

Action UniformPolicy::choose(const GameState& s, std::mt19937_64& rng) const {
  thread_local std::vector<Action> buf;
  legal_actions(s, buf);
  return buf[uniform_below(rng, buf.size())];
}

BiasedPolicy::BiasedPolicy(std::vector<double> prefs) : prefs_(std::move(prefs)) {
  if (prefs_.size() < 2) throw std::invalid_argument("biased policy: need >= 2 branches");
  double sum = 0;
  for (double p : prefs_) {
    if (!(p >= 0.0)) throw std::invalid_argument("biased policy: negative pref");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("biased policy: prefs must sum to 1");
  cumulative_.resize(prefs_.size());
  double acc = 0;
  for (size_t i = 0; i < prefs_.size(); ++i) {
    acc += prefs_[i];
    cumulative_[i] = acc;
  }
}

Action BiasedPolicy::choose(const GameState& s, std::mt19937_64& rng) const {
  if (s.id != GameId::ToyIdeal)
    throw std::invalid_argument("biased policy: ToyIdeal only");
  if (static_cast<size_t>(s.toy().branching) != prefs_.size())
    throw std::invalid_argument("biased policy: prefs length != branching factor");
  double u = uniform_unit(rng);
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  size_t i = static_cast<size_t>(it - cumulative_.begin());
  if (i >= prefs_.size()) i = prefs_.size() - 1;
  return static_cast<Action>(i);
}

}  // namespace gzl::search
