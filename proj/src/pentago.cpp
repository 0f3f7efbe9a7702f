#include <stdexcept>

#include "gzl/game.hpp"

namespace gzl::detail {

namespace {

constexpr uint64_t kBoardMask = (uint64_t{1} << 36) - 1;

// All 32 five-in-a-row cell sets on the 6x6 board.
const std::array<uint64_t, 32>& win_masks() {
  static const std::array<uint64_t, 32> masks = [] {
    std::array<uint64_t, 32> m{};
    int k = 0;
    auto bit = [](int r, int c) { return uint64_t{1} << (r * 6 + c); };
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c + 4 < 6; ++c) {
        uint64_t w = 0;
        for (int i = 0; i < 5; ++i) w |= bit(r, c + i);
        m[k++] = w;
      }
    for (int c = 0; c < 6; ++c)
      for (int r = 0; r + 4 < 6; ++r) {
        uint64_t w = 0;
        for (int i = 0; i < 5; ++i) w |= bit(r + i, c);
        m[k++] = w;
      }
    for (int r = 0; r + 4 < 6; ++r)
      for (int c = 0; c + 4 < 6; ++c) {
        uint64_t w = 0;
        for (int i = 0; i < 5; ++i) w |= bit(r + i, c + i);
        m[k++] = w;
      }
    for (int r = 0; r + 4 < 6; ++r)
      for (int c = 4; c < 6; ++c) {
        uint64_t w = 0;
        for (int i = 0; i < 5; ++i) w |= bit(r + i, c - i);
        m[k++] = w;
      }
    return m;
  }();
  return masks;
}

// Quadrant q has top-left corner (3*(q/2), 3*(q%2)).
uint64_t rotate_quadrant(uint64_t stones, int q, bool clockwise) {
  int r0 = 3 * (q / 2);
  int c0 = 3 * (q % 2);
  uint64_t out = stones;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // clockwise: new (i,j) <- old (2-j, i); counter-clockwise: old (j, 2-i)
      int oi = clockwise ? 2 - j : j;
      int oj = clockwise ? i : 2 - i;
      uint64_t src = uint64_t{1} << ((r0 + oi) * 6 + (c0 + oj));
      uint64_t dst = uint64_t{1} << ((r0 + i) * 6 + (c0 + j));
      if (stones & src)
        out |= dst;
      else
        out &= ~dst;
    }
  return out;
}

}  // namespace

bool pentago_has_five(uint64_t stones) {
  for (uint64_t m : win_masks())
    if ((stones & m) == m) return true;
  return false;
}

std::vector<Action> pentago_legal(const PentagoData& d) {
  std::vector<Action> out;
  uint64_t occupied = d.stones[0] | d.stones[1];
  out.reserve(8 * (36 - __builtin_popcountll(occupied)));
  for (int cell = 0; cell < 36; ++cell) {
    if (occupied & (uint64_t{1} << cell)) continue;
    for (int qd = 0; qd < 8; ++qd) out.push_back(cell * 8 + qd);
  }
  return out;
}

GameState pentago_apply(const GameState& s, Action a) {
  if (a < 0 || a >= 288) throw std::invalid_argument("pentago: action out of range");
  const auto& d = s.pentago();
  int cell = a / 8;
  int quadrant = (a % 8) / 2;
  bool clockwise = (a % 2) == 0;
  uint64_t bit = uint64_t{1} << cell;
  if ((d.stones[0] | d.stones[1]) & bit)
    throw std::invalid_argument("pentago: cell occupied");

  GameState n = s;
  auto& nd = std::get<PentagoData>(n.data);
  nd.stones[s.to_move] |= bit;
  n.to_move = 1 - s.to_move;
  n.turn = s.turn + 1;
  // A five completed by the placement alone ends the game before rotating.
  if (pentago_has_five(nd.stones[s.to_move])) return n;
  nd.stones[0] = rotate_quadrant(nd.stones[0], quadrant, clockwise);
  nd.stones[1] = rotate_quadrant(nd.stones[1], quadrant, clockwise);
  return n;
}

Outcome pentago_outcome(const GameState& s) {
  const auto& d = s.pentago();
  bool five0 = pentago_has_five(d.stones[0]);
  bool five1 = pentago_has_five(d.stones[1]);
  if (five0 && five1) return Outcome::draw();
  if (five0) return Outcome::win(0);
  if (five1) return Outcome::win(1);
  if ((d.stones[0] | d.stones[1]) == kBoardMask) return Outcome::draw();
  return Outcome::ongoing();
}

}  // namespace gzl::detail
