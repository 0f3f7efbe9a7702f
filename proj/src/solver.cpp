#include "gzl/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "gzl/rng.hpp"

namespace gzl::solver {

TranspositionTable::TranspositionTable(int bits) {
  if (bits < 4 || bits > 30)
    throw std::invalid_argument("transposition table: bits must be in [4, 30]");
  slots_.resize(uint64_t{1} << bits);
  mask_ = (uint64_t{1} << bits) - 1;
}

const TranspositionTable::Entry* TranspositionTable::probe(uint64_t key) const {
  const Entry& e = slots_[splitmix64(key) & mask_];
  return e.key == key ? &e : nullptr;
}

void TranspositionTable::store(uint64_t key, int value, Bound bound, int depth,
                               int best) {
  Entry& e = slots_[splitmix64(key) & mask_];
  // same position, or shallower occupant: replace
  if (e.key != key && e.key != 0 && e.depth > depth) return;
  e.key = key;
  e.value = static_cast<int8_t>(value);
  e.bound = bound;
  e.depth = static_cast<uint8_t>(depth);
  e.best = static_cast<int8_t>(best);
}

void TranspositionTable::clear() {
  std::fill(slots_.begin(), slots_.end(), Entry{});
}

Connect4Solver::Connect4Solver(SolverConfig cfg) : cfg_(cfg), tt_(cfg.tt_bits) {
  set_geometry(7, 6);
}

void Connect4Solver::set_geometry(int width, int height) {
  if (width == width_ && height == height_) return;
  c4::Board probe(width, height);  // validates the geometry
  width_ = width;
  height_ = height;
  stride_ = height + 1;
  board_mask_ = probe.full_mask();
  bottom_mask_ = 0;
  for (int c = 0; c < width; ++c) bottom_mask_ |= probe.bottom_bit(c);
  column_order_.resize(width);
  for (int i = 0; i < width; ++i)
    column_order_[i] = width / 2 + (i % 2 == 0 ? 1 : -1) * ((i + 1) / 2);
  tt_.clear();
}

uint64_t Connect4Solver::mirror(uint64_t bits) const {
  uint64_t out = 0;
  uint64_t col_mask = (uint64_t{1} << stride_) - 1;
  for (int c = 0; c < width_; ++c)
    out |= ((bits >> (c * stride_)) & col_mask) << ((width_ - 1 - c) * stride_);
  return out;
}

uint64_t Connect4Solver::table_key(uint64_t position, uint64_t mask) const {
  uint64_t key = position + mask + bottom_mask_;
  if (!cfg_.mirror_fold) return key;
  uint64_t mkey = mirror(position) + mirror(mask) + bottom_mask_;
  return std::min(key, mkey);
}

uint64_t Connect4Solver::winning_spots(uint64_t position, uint64_t mask) const {
  uint64_t r = 0;
  for (int shift : {1, stride_ - 1, stride_, stride_ + 1}) {
    uint64_t p = (position << shift) & (position << 2 * shift);
    r |= p & (position << 3 * shift);
    r |= p & (position >> shift);
    p = (position >> shift) & (position >> 2 * shift);
    r |= p & (position >> 3 * shift);
    r |= p & (position << shift);
  }
  return r & (board_mask_ ^ mask);
}

int Connect4Solver::negamax(uint64_t position, uint64_t mask, int alpha, int beta) {
  if (++nodes_ > cfg_.node_budget) throw BudgetExceeded(cfg_.node_budget);
  if (mask == board_mask_) return 0;

  uint64_t playable = (mask + bottom_mask_) & board_mask_;
  if (winning_spots(position, mask) & playable) return 1;

  uint64_t key = table_key(position, mask);
  int tt_best = -1;
  if (const auto* e = tt_.probe(key)) {
    tt_best = e->best;
    switch (e->bound) {
      case TranspositionTable::Bound::Exact:
        return e->value;
      case TranspositionTable::Bound::Lower:
        if (e->value >= beta) return e->value;
        alpha = std::max(alpha, static_cast<int>(e->value));
        break;
      case TranspositionTable::Bound::Upper:
        if (e->value <= alpha) return e->value;
        beta = std::min(beta, static_cast<int>(e->value));
        break;
    }
  }

  int alpha0 = alpha;
  int best = -2;
  int best_move = -1;
  for (int i = -1; i < width_; ++i) {
    int col;
    if (i < 0) {
      if (tt_best < 0) continue;
      col = tt_best;
    } else {
      col = column_order_[i];
      if (col == tt_best) continue;
    }
    uint64_t move = playable & (((uint64_t{1} << height_) - 1) << (col * stride_));
    if (!move) continue;
    int v = -negamax(position ^ mask, mask | move, -beta, -alpha);
    if (v > best) {
      best = v;
      best_move = col;
    }
    alpha = std::max(alpha, v);
    if (alpha >= beta) break;
  }

  int depth = height_ * width_ - __builtin_popcountll(mask);
  auto bound = best >= beta    ? TranspositionTable::Bound::Lower
               : best <= alpha0 ? TranspositionTable::Bound::Upper
                                : TranspositionTable::Bound::Exact;
  tt_.store(key, best, bound, depth, best_move);
  return best;
}

SolveResult Connect4Solver::solve(const c4::Board& board, int to_move) {
  set_geometry(board.width, board.height);
  nodes_ = 0;
  auto t0 = std::chrono::steady_clock::now();

  SolveResult res;
  uint64_t mask = board.mask();
  uint64_t mine = board.stones[to_move];
  uint64_t theirs = board.stones[1 - to_move];

  if (board.has_line(1 - to_move)) {
    res.value = -1;  // opponent already made a line; no moves to take
  } else if (board.has_line(to_move)) {
    res.value = 1;
  } else if (mask == board_mask_) {
    res.value = 0;
  } else {
    uint64_t playable = (mask + bottom_mask_) & board_mask_;
    int best = -2;
    std::vector<std::pair<Action, int>> child_values;
    for (int col = 0; col < width_; ++col) {
      uint64_t move = playable & board.column_mask(col);
      if (!move) continue;
      int v;
      if (winning_spots(mine, mask) & move) {
        v = 1;
      } else {
        v = -negamax(theirs, mask | move, -1, 1);
      }
      child_values.emplace_back(col, v);
      best = std::max(best, v);
    }
    res.value = best;
    for (auto [col, v] : child_values)
      if (v == best) res.optimal_actions.push_back(col);
  }

  res.nodes_visited = nodes_;
  res.cpu_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

SolveResult Connect4Solver::solve(const GameState& s) {
  if (s.id != GameId::ConnectFour)
    throw std::invalid_argument("solver: GameState must be Connect Four");
  return solve(s.c4().board, s.to_move);
}

void Connect4Solver::reset() { tt_.clear(); }

std::vector<TimedBucket> solve_timed(
    Connect4Solver& solver,
    const std::vector<std::tuple<c4::Board, int, uint64_t>>& states_with_ranks,
    const std::vector<uint64_t>& bucket_edges) {
  if (bucket_edges.size() < 2)
    throw std::invalid_argument("solve_timed: need at least two bucket edges");
  size_t n_buckets = bucket_edges.size() - 1;
  std::vector<std::vector<double>> log_times(n_buckets);

  for (const auto& [board, to_move, rank] : states_with_ranks) {
    size_t bucket = n_buckets;
    for (size_t b = 0; b + 1 < bucket_edges.size(); ++b)
      if (rank >= bucket_edges[b] && rank < bucket_edges[b + 1]) {
        bucket = b;
        break;
      }
    if (bucket == n_buckets) continue;  // outside the partition
    solver.reset();  // cold cache keeps timings comparable
    SolveResult res = solver.solve(board, to_move);
    log_times[bucket].push_back(std::log(std::max(res.cpu_seconds, 1e-9)));
  }

  std::vector<TimedBucket> out;
  for (size_t b = 0; b < n_buckets; ++b) {
    if (log_times[b].empty()) continue;
    TimedBucket tb;
    tb.rank_lo = bucket_edges[b];
    tb.rank_hi = bucket_edges[b + 1];
    tb.count = log_times[b].size();
    double mean = 0;
    for (double lt : log_times[b]) mean += lt;
    mean /= tb.count;
    double var = 0;
    for (double lt : log_times[b]) var += (lt - mean) * (lt - mean);
    var /= tb.count;
    tb.geo_mean_seconds = std::exp(mean);
    tb.geo_std = std::exp(std::sqrt(var));
    out.push_back(tb);
  }
  return out;
}

std::vector<double> ground_truth_value_loss(
    Connect4Solver& solver, const std::vector<std::pair<GameState, double>>& estimates) {
  std::vector<double> losses;
  losses.reserve(estimates.size());
  for (const auto& [state, v] : estimates) {
    double z = solver.solve(state).value;
    losses.push_back((z - v) * (z - v));
  }
  return losses;
}

std::vector<BucketMean> bucket_means(const std::vector<double>& values,
                                     const std::vector<uint64_t>& ranks,
                                     const std::vector<uint64_t>& bucket_edges) {
  if (values.size() != ranks.size())
    throw std::invalid_argument("bucket_means: values/ranks size mismatch");
  if (bucket_edges.size() < 2)
    throw std::invalid_argument("bucket_means: need at least two bucket edges");
  size_t n_buckets = bucket_edges.size() - 1;
  std::vector<BucketMean> buckets(n_buckets);
  for (size_t b = 0; b < n_buckets; ++b) {
    buckets[b].rank_lo = bucket_edges[b];
    buckets[b].rank_hi = bucket_edges[b + 1];
  }
  for (size_t i = 0; i < values.size(); ++i) {
    for (size_t b = 0; b < n_buckets; ++b) {
      if (ranks[i] >= bucket_edges[b] && ranks[i] < bucket_edges[b + 1]) {
        buckets[b].mean += values[i];
        buckets[b].count++;
        break;
      }
    }
  }
  std::vector<BucketMean> out;
  for (auto& b : buckets) {
    if (b.count == 0) continue;
    b.mean /= b.count;
    out.push_back(b);
  }
  return out;
}

}  // namespace gzl::solver
