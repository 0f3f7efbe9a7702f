#pragma once

#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "gzl/connect4_board.hpp"
#include "gzl/game.hpp"

namespace gzl::solver {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(uint64_t budget)
      : std::runtime_error("solver: node budget of " + std::to_string(budget) +
                           " exceeded") {}
};

struct SolverConfig {
  uint64_t node_budget = 1ull << 34;
  int tt_bits = 20;          // 2^bits entries
  bool mirror_fold = false;  // fold left/right symmetric positions in the table
};

// Exact game-theoretic result from the mover's perspective. optimal_actions
// holds every move that preserves the value; when the position is lost that
// is every legal move.
struct SolveResult {
  int value = 0;  // -1, 0 or +1
  std::vector<Action> optimal_actions;
  uint64_t nodes_visited = 0;
  double cpu_seconds = 0;
};

// Bounded cache of solved positions. Lookups never change solve results,
// only speed; deeper entries win on replacement.
class TranspositionTable {
 public:
  enum class Bound : uint8_t { Exact = 1, Lower = 2, Upper = 3 };
  struct Entry {
    uint64_t key = 0;  // 0 = empty slot
    int8_t value = 0;
    Bound bound = Bound::Exact;
    uint8_t depth = 0;  // remaining plies at store time
    int8_t best = -1;   // best column, for move ordering
  };

  explicit TranspositionTable(int bits);
  const Entry* probe(uint64_t key) const;
  void store(uint64_t key, int value, Bound bound, int depth, int best);
  void clear();
  size_t capacity() const { return slots_.size(); }

 private:
  std::vector<Entry> slots_;
  uint64_t mask_;
};

// Alpha-beta Connect Four solver over any geometry accepted by c4::Board.
// Negamax values in {-1, 0, +1}; center-first move ordering with the
// transposition-table move tried first.
class Connect4Solver {
 public:
  explicit Connect4Solver(SolverConfig cfg = {});

  SolveResult solve(const GameState& s);  // GameId::ConnectFour only
  SolveResult solve(const c4::Board& board, int to_move);

  void reset();  // drop all cached positions
  const SolverConfig& config() const { return cfg_; }
  void set_node_budget(uint64_t budget) { cfg_.node_budget = budget; }

 private:
  void set_geometry(int width, int height);
  uint64_t table_key(uint64_t position, uint64_t mask) const;
  uint64_t winning_spots(uint64_t position, uint64_t mask) const;
  uint64_t mirror(uint64_t bits) const;
  int negamax(uint64_t position, uint64_t mask, int alpha, int beta);

  SolverConfig cfg_;
  TranspositionTable tt_;
  uint64_t nodes_ = 0;

  int width_ = 0, height_ = 0, stride_ = 0;
  uint64_t board_mask_ = 0, bottom_mask_ = 0;
  std::vector<int> column_order_;  // center-first
};

// Per-rank-bucket geometric statistics of solve time. Buckets are the
// half-open rank intervals [edges[i], edges[i+1]); empty buckets are omitted.
struct TimedBucket {
  uint64_t rank_lo = 0;
  uint64_t rank_hi = 0;
  size_t count = 0;
  double geo_mean_seconds = 0;
  double geo_std = 1.0;
};

std::vector<TimedBucket> solve_timed(
    Connect4Solver& solver,
    const std::vector<std::tuple<c4::Board, int, uint64_t>>& states_with_ranks,
    const std::vector<uint64_t>& bucket_edges);

// (z - v)^2 per state, z = exact solver value mapped to the mover.
std::vector<double> ground_truth_value_loss(
    Connect4Solver& solver, const std::vector<std::pair<GameState, double>>& estimates);

struct BucketMean {
  uint64_t rank_lo = 0;
  uint64_t rank_hi = 0;
  size_t count = 0;
  double mean = 0;
};

std::vector<BucketMean> bucket_means(const std::vector<double>& values,
                                     const std::vector<uint64_t>& ranks,
                                     const std::vector<uint64_t>& bucket_edges);

}  // namespace gzl::solver
