#include "gzl/mcts.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "gzl/rng.hpp"
#include "gzl/solver.hpp"

namespace gzl::search {

void SearchConfig::validate() const {
  if (simulations < 1) throw std::invalid_argument("search: simulations must be >= 1");
  if (!(c_puct > 0)) throw std::invalid_argument("search: c_puct must be positive");
  if (temperature < 0) throw std::invalid_argument("search: temperature must be >= 0");
  if (rollout_count < 1) throw std::invalid_argument("search: rollout_count must be >= 1");
}

size_t puct_select_index(const SearchNode& node, double c_puct, double unvisited_q) {
  if (node.actions.empty()) throw std::logic_error("puct_select: node has no actions");
  double sqrt_total = std::sqrt(static_cast<double>(node.total_visits()));
  size_t best = 0;
  double best_score = -1e300;
  for (size_t i = 0; i < node.actions.size(); ++i) {
    double u = c_puct * node.prior[i] * sqrt_total / (1.0 + node.visit_counts[i]);
    double score = node.q(i, unvisited_q) + u;
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

Action puct_select(const SearchNode& node, double c_puct, double unvisited_q) {
  return node.actions[puct_select_index(node, c_puct, unvisited_q)];
}

double terminal_value(const Outcome& o, int to_move) {
  switch (o.kind) {
    case Outcome::Kind::Draw: return 0.0;
    case Outcome::Kind::Win: return o.winner == to_move ? 1.0 : -1.0;
    case Outcome::Kind::Ongoing: break;
  }
  throw std::logic_error("terminal_value: state is not terminal");
}

namespace {

void expand_node(SearchNode& node, const Evaluator& eval, std::mt19937_64& rng,
                 double& leaf_value) {
  legal_actions(node.state, node.actions);
  auto [value, prior] = eval.evaluate(node.state, node.actions, rng);
  if (prior.size() != node.actions.size())
    throw std::logic_error("mcts: evaluator prior size mismatch");
  node.prior = std::move(prior);
  node.visit_counts.assign(node.actions.size(), 0);
  node.value_sums.assign(node.actions.size(), 0.0);
  node.children.assign(node.actions.size(), -1);
  node.expanded = true;
  leaf_value = value;
}

}  // namespace

SearchTree mcts_search(const GameState& s, const Evaluator& eval,
                       const SearchConfig& cfg, std::mt19937_64& rng) {
  cfg.validate();
  if (outcome(s).terminal())
    throw std::invalid_argument("mcts_search: terminal input state");

  SearchTree tree;
  tree.nodes.reserve(static_cast<size_t>(cfg.simulations) + 2);
  tree.nodes.emplace_back();
  tree.nodes[0].state = s;
  double unused = 0;
  expand_node(tree.nodes[0], eval, rng, unused);  // root expansion is not a simulation

  std::vector<std::pair<int32_t, size_t>> path;
  for (int sim = 0; sim < cfg.simulations; ++sim) {
    path.clear();
    int32_t idx = 0;
    double leaf_value = 0;
    for (;;) {
      size_t ai = puct_select_index(tree.nodes[idx], cfg.c_puct, cfg.unvisited_q);
      if (tree.nodes[idx].children[ai] < 0) {
        GameState child_state = apply(tree.nodes[idx].state, tree.nodes[idx].actions[ai]);
        tree.nodes.emplace_back();
        tree.nodes.back().state = std::move(child_state);
        tree.nodes[idx].children[ai] = static_cast<int32_t>(tree.nodes.size() - 1);
      }
      path.emplace_back(idx, ai);
      idx = tree.nodes[idx].children[ai];
      SearchNode& child = tree.nodes[idx];
      Outcome o = outcome(child.state);
      if (o.terminal()) {
        leaf_value = terminal_value(o, child.state.to_move);
        break;
      }
      if (!child.expanded) {
        expand_node(child, eval, rng, leaf_value);
        break;
      }
    }
    // negamax backup: each level up flips the sign
    double v = leaf_value;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      v = -v;
      SearchNode& n = tree.nodes[it->first];
      n.value_sums[it->second] += v;
      n.visit_counts[it->second] += 1;
    }
  }
  return tree;
}

SearchTree mcts_search(const GameState& s, const Evaluator& eval, const SearchConfig& cfg) {
  std::mt19937_64 rng(splitmix64(cfg.seed));
  return mcts_search(s, eval, cfg, rng);
}

RolloutEvaluator::RolloutEvaluator(int rollout_count) : rollout_count_(rollout_count) {
  if (rollout_count < 1)
    throw std::invalid_argument("rollout evaluator: rollout_count must be >= 1");
}

std::pair<double, std::vector<double>> RolloutEvaluator::evaluate(
    const GameState& s, const std::vector<Action>& legal, std::mt19937_64& rng) const {
  thread_local std::vector<Action> buf;
  double sum = 0;
  for (int r = 0; r < rollout_count_; ++r) {
    GameState cur = s;
    Outcome o = outcome(cur);
    while (!o.terminal()) {
      legal_actions(cur, buf);
      cur = apply(cur, buf[uniform_below(rng, buf.size())]);
      o = outcome(cur);
    }
    // value seen from the mover at s
    double v = terminal_value(o, cur.to_move);
    sum += (cur.to_move == s.to_move) ? v : -v;
  }
  return {sum / rollout_count_,
          std::vector<double>(legal.size(), 1.0 / legal.size())};
}

struct SolverBackedEvaluator::Impl {
  explicit Impl(uint64_t budget) : solver(solver::SolverConfig{budget}) {}
  mutable std::mutex mutex;
  mutable solver::Connect4Solver solver;
};

SolverBackedEvaluator::SolverBackedEvaluator(uint64_t node_budget)
    : impl_(std::make_unique<Impl>(node_budget)) {}

SolverBackedEvaluator::~SolverBackedEvaluator() = default;

std::pair<double, std::vector<double>> SolverBackedEvaluator::evaluate(
    const GameState& s, const std::vector<Action>& legal, std::mt19937_64&) const {
  if (s.id != GameId::ConnectFour)
    throw std::invalid_argument("solver evaluator: Connect Four only");
  std::lock_guard<std::mutex> lock(impl_->mutex);
  auto res = impl_->solver.solve(s);
  return {static_cast<double>(res.value),
          std::vector<double>(legal.size(), 1.0 / legal.size())};
}

MctsPolicy::MctsPolicy(std::shared_ptr<const Evaluator> eval, SearchConfig cfg)
    : eval_(std::move(eval)), cfg_(cfg) {
  cfg_.validate();
  if (!eval_) throw std::invalid_argument("mcts policy: null evaluator");
}

Action MctsPolicy::choose(const GameState& s, std::mt19937_64& rng) const {
  SearchTree tree = mcts_search(s, *eval_, cfg_, rng);
  const SearchNode& root = tree.root();
  std::vector<double> counts(root.visit_counts.begin(), root.visit_counts.end());
  PolicyDistribution pi = temperature_policy(root.actions, counts, cfg_.temperature);
  return pi.sample(rng);
}

}  // namespace gzl::search
