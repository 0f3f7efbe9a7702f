#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "gzl/game.hpp"
#include "gzl/policy.hpp"

namespace gzl::search {

struct SearchConfig {
  int simulations = 300;
  double c_puct = 2.0;
  double temperature = 1.0;
  int rollout_count = 1;   // rollouts per leaf evaluation
  uint64_t seed = 0;
  double unvisited_q = 0.0;  // Q assumed for actions with N = 0

  void validate() const;
};

// One node of the search tree. Values are stored from the perspective of the
// player to move at this node; Q(s,a) = value_sums[a] / visit_counts[a] when
// visited. Sum of child visits equals this node's visits minus one (the root
// is never counted, so its children sum to the simulation count).
struct SearchNode {
  GameState state;
  std::vector<Action> actions;
  std::vector<double> prior;
  std::vector<uint32_t> visit_counts;
  std::vector<double> value_sums;
  std::vector<int32_t> children;  // indices into SearchTree::nodes, -1 unexpanded
  bool expanded = false;

  double q(size_t i, double unvisited_q) const {
    return visit_counts[i] > 0 ? value_sums[i] / visit_counts[i] : unvisited_q;
  }
  uint64_t total_visits() const {
    uint64_t n = 0;
    for (uint32_t v : visit_counts) n += v;
    return n;
  }
};

struct SearchTree {
  std::vector<SearchNode> nodes;
  SearchNode& root() { return nodes.front(); }
  const SearchNode& root() const { return nodes.front(); }
};

// argmax_a [ Q(s,a) + c_puct * p(s,a) * sqrt(sum_b N(s,b)) / (1 + N(s,a)) ],
// ties broken by lowest action index.
size_t puct_select_index(const SearchNode& node, double c_puct, double unvisited_q = 0.0);
Action puct_select(const SearchNode& node, double c_puct, double unvisited_q = 0.0);

// Pluggable leaf evaluation: value in [-1, 1] from the mover's perspective
// plus a normalized prior over `legal`. Implementations must be safe for
// concurrent use from many searches.
class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual std::pair<double, std::vector<double>> evaluate(
      const GameState& s, const std::vector<Action>& legal,
      std::mt19937_64& rng) const = 0;
};

// Uniform prior; value = mean exact outcome of uniformly random playouts.
class RolloutEvaluator : public Evaluator {
 public:
  explicit RolloutEvaluator(int rollout_count = 1);
  std::pair<double, std::vector<double>> evaluate(
      const GameState& s, const std::vector<Action>& legal,
      std::mt19937_64& rng) const override;

 private:
  int rollout_count_;
};

// Exact oracle for Connect Four: value from the alpha-beta solver, uniform
// prior. Internally serialized, so shareable across searches.
class SolverBackedEvaluator : public Evaluator {
 public:
  explicit SolverBackedEvaluator(uint64_t node_budget = 1ull << 26);
  ~SolverBackedEvaluator() override;
  std::pair<double, std::vector<double>> evaluate(
      const GameState& s, const std::vector<Action>& legal,
      std::mt19937_64& rng) const override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Exact game value of a terminal state from `to_move`'s perspective.
double terminal_value(const Outcome& o, int to_move);

// Sequential PUCT search; root visit counts sum to cfg.simulations. Values
// are backed up negamax style, terminal leaves with their exact outcome.
SearchTree mcts_search(const GameState& s, const Evaluator& eval, const SearchConfig& cfg);
SearchTree mcts_search(const GameState& s, const Evaluator& eval, const SearchConfig& cfg,
                       std::mt19937_64& rng);

// Harness policy: search, then sample from the temperature policy over the
// root visit counts.
class MctsPolicy : public Policy {
 public:
  MctsPolicy(std::shared_ptr<const Evaluator> eval, SearchConfig cfg);
  Action choose(const GameState& s, std::mt19937_64& rng) const override;

 private:
  std::shared_ptr<const Evaluator> eval_;
  SearchConfig cfg_;
};

}  // namespace gzl::search
