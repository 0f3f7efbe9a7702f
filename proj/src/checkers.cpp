#include <stdexcept>

#include "gzl/game.hpp"

namespace gzl::detail {

namespace {

constexpr int kMaxPlies = 1000;
constexpr int kNoCaptureDrawPlies = 40;

// Dark squares indexed 0..31 row-major: square = row*4 + col/2, where dark
// columns are the odd ones on even rows and the even ones on odd rows.
// Player 0 starts on rows 0..2 and moves toward row 7.
inline int row_of(int sq) { return sq / 4; }
inline int col_of(int sq) {
  int r = sq / 4, k = sq % 4;
  return r % 2 == 0 ? 2 * k + 1 : 2 * k;
}
inline int square_at(int r, int c) {
  if (r < 0 || r > 7 || c < 0 || c > 7) return -1;
  if ((r + c) % 2 == 0) return -1;
  return r * 4 + c / 2;
}

// Directions: 0 (+1,-1), 1 (+1,+1), 2 (-1,-1), 3 (-1,+1).
constexpr int kDr[4] = {1, 1, -1, -1};
constexpr int kDc[4] = {-1, 1, -1, 1};

inline int owner_of(uint8_t cell) {
  if (cell == 1 || cell == 2) return 0;
  if (cell == 3 || cell == 4) return 1;
  return -1;
}
inline bool is_king(uint8_t cell) { return cell == 2 || cell == 4; }

inline bool dir_allowed(uint8_t cell, int dir) {
  if (is_king(cell)) return true;
  // men move forward only: player 0 toward higher rows, player 1 toward lower
  return owner_of(cell) == 0 ? dir < 2 : dir >= 2;
}

inline int step_square(int sq, int dir) {
  return square_at(row_of(sq) + kDr[dir], col_of(sq) + kDc[dir]);
}
inline int jump_square(int sq, int dir) {
  return square_at(row_of(sq) + 2 * kDr[dir], col_of(sq) + 2 * kDc[dir]);
}

bool can_jump_from(const CheckersData& d, int sq, int player) {
  uint8_t cell = d.cells[sq];
  if (owner_of(cell) != player) return false;
  for (int dir = 0; dir < 4; ++dir) {
    if (!dir_allowed(cell, dir)) continue;
    int over = step_square(sq, dir);
    int land = jump_square(sq, dir);
    if (over >= 0 && land >= 0 && owner_of(d.cells[over]) == 1 - player &&
        d.cells[land] == 0)
      return true;
  }
  return false;
}

void jumps_from(const CheckersData& d, int sq, int player, std::vector<Action>& out) {
  uint8_t cell = d.cells[sq];
  for (int dir = 0; dir < 4; ++dir) {
    if (!dir_allowed(cell, dir)) continue;
    int over = step_square(sq, dir);
    int land = jump_square(sq, dir);
    if (over >= 0 && land >= 0 && owner_of(d.cells[over]) == 1 - player &&
        d.cells[land] == 0)
      out.push_back(sq * 4 + dir);
  }
}

}  // namespace

std::vector<Action> checkers_legal(const CheckersData& d, int to_move) {
  std::vector<Action> out;
  if (d.continuation != 0xff) {
    jumps_from(d, d.continuation, to_move, out);
    return out;
  }
  for (int sq = 0; sq < 32; ++sq)
    if (owner_of(d.cells[sq]) == to_move) jumps_from(d, sq, to_move, out);
  if (!out.empty()) return out;  // captures are mandatory
  for (int sq = 0; sq < 32; ++sq) {
    uint8_t cell = d.cells[sq];
    if (owner_of(cell) != to_move) continue;
    for (int dir = 0; dir < 4; ++dir) {
      if (!dir_allowed(cell, dir)) continue;
      int dst = step_square(sq, dir);
      if (dst >= 0 && d.cells[dst] == 0) out.push_back(sq * 4 + dir);
    }
  }
  return out;
}

GameState checkers_apply(const GameState& s, Action a) {
  if (a < 0 || a >= 128) throw std::invalid_argument("checkers: action out of range");
  const auto& d = s.checkers();
  int from = a / 4;
  int dir = a % 4;
  uint8_t cell = d.cells[from];
  if (owner_of(cell) != s.to_move || !dir_allowed(cell, dir))
    throw std::invalid_argument("checkers: illegal move");
  if (d.continuation != 0xff && from != d.continuation)
    throw std::invalid_argument("checkers: must continue the jump sequence");

  int over = step_square(from, dir);
  int land = jump_square(from, dir);
  bool jump = over >= 0 && land >= 0 && owner_of(d.cells[over]) == 1 - s.to_move &&
              d.cells[land] == 0;

  GameState n = s;
  auto& nd = std::get<CheckersData>(n.data);
  n.turn = s.turn + 1;

  if (jump) {
    nd.cells[from] = 0;
    nd.cells[over] = 0;
    nd.cells[land] = cell;
    nd.plies_since_capture = 0;
    bool crowned = false;
    if (!is_king(cell)) {
      int back_row = s.to_move == 0 ? 7 : 0;
      if (row_of(land) == back_row) {
        nd.cells[land] = static_cast<uint8_t>(cell + 1);
        crowned = true;  // crowning ends the jump sequence
      }
    }
    if (!crowned && can_jump_from(nd, land, s.to_move)) {
      nd.continuation = static_cast<uint8_t>(land);
      n.to_move = s.to_move;
    } else {
      nd.continuation = 0xff;
      n.to_move = 1 - s.to_move;
    }
    return n;
  }

  // Simple move; only legal when the mover has no jump anywhere.
  if (d.continuation != 0xff)
    throw std::invalid_argument("checkers: must continue the jump sequence");
  int dst = step_square(from, dir);
  if (dst < 0 || d.cells[dst] != 0) throw std::invalid_argument("checkers: blocked move");
  {
    std::vector<Action> jumps;
    for (int sq = 0; sq < 32; ++sq)
      if (owner_of(d.cells[sq]) == s.to_move) jumps_from(d, sq, s.to_move, jumps);
    if (!jumps.empty())
      throw std::invalid_argument("checkers: capture is mandatory");
  }
  nd.cells[from] = 0;
  nd.cells[dst] = cell;
  int back_row = s.to_move == 0 ? 7 : 0;
  if (!is_king(cell) && row_of(dst) == back_row)
    nd.cells[dst] = static_cast<uint8_t>(cell + 1);
  nd.plies_since_capture = static_cast<uint16_t>(d.plies_since_capture + 1);
  n.to_move = 1 - s.to_move;
  return n;
}

Outcome checkers_outcome(const GameState& s) {
  const auto& d = s.checkers();
  int pieces[2] = {0, 0};
  for (uint8_t c : d.cells) {
    int o = owner_of(c);
    if (o >= 0) pieces[o]++;
  }
  if (pieces[s.to_move] == 0) return Outcome::win(1 - s.to_move);
  if (d.plies_since_capture >= kNoCaptureDrawPlies) return Outcome::draw();
  if (s.turn >= kMaxPlies) return Outcome::draw();
  if (checkers_legal(d, s.to_move).empty()) return Outcome::draw();
  return Outcome::ongoing();
}

}  // namespace gzl::detail
