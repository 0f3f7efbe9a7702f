#pragma once

#include <random>
#include <vector>

#include "gzl/game.hpp"

namespace gzl::search {

// Probability distribution over the legal actions of one state. `actions`
// holds the action indices in ascending order, `probs` is aligned with it and
// sums to 1 (within 1e-12).
struct PolicyDistribution {
  std::vector<Action> actions;
  std::vector<double> probs;

  void validate() const;
  Action sample(std::mt19937_64& rng) const;
};

// pi(a) = N(a)^(1/T) / sum_b N(b)^(1/T). T = 0 is the argmax policy with
// lowest-index tie-break. Computed in shifted log space so small T does not
// overflow. Throws when all counts are zero.
std::vector<double> temperature_weights(const std::vector<double>& counts, double temperature);
PolicyDistribution temperature_policy(const std::vector<Action>& actions,
                                      const std::vector<double>& counts,
                                      double temperature);

// value_loss = (z - v)^2, policy_loss = -sum_a pi[a] ln p[a] (natural log).
struct CompositeLoss {
  double value_loss = 0;
  double policy_loss = 0;
  double total = 0;
};
CompositeLoss composite_loss(double z, double v, const std::vector<double>& pi,
                             const std::vector<double>& p);

// Probability mass pi assigns to the optimal-action set. Returns nullopt
// (skip) when the set is empty.
std::optional<double> optimal_move_probability(const PolicyDistribution& pi,
                                               const std::vector<Action>& optimal_set);

// Move-selection policy used by the self-play harness.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual Action choose(const GameState& s, std::mt19937_64& rng) const = 0;
};

class UniformPolicy : public Policy {
 public:
  Action choose(const GameState& s, std::mt19937_64& rng) const override;
};

// Samples ToyIdeal branch i with probability prefs[i] at every turn.
class BiasedPolicy : public Policy {
 public:
  explicit BiasedPolicy(std::vector<double> prefs);
  Action choose(const GameState& s, std::mt19937_64& rng) const override;

 private:
  std::vector<double> prefs_;
  std::vector<double> cumulative_;
};

}  // namespace gzl::search
