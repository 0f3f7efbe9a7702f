#include <numeric>
#include <stdexcept>

#include "gzl/game.hpp"

namespace gzl::detail {

namespace {

constexpr int kMaxPlies = 1000;

inline bool owns(int player, int house) {
  return player == 0 ? house < 6 : house >= 6;
}

inline int row_sum(const OwareData& d, int player) {
  int lo = player == 0 ? 0 : 6;
  int sum = 0;
  for (int h = lo; h < lo + 6; ++h) sum += d.houses[h];
  return sum;
}

}  // namespace

std::vector<Action> oware_legal(const OwareData& d, int to_move) {
  std::vector<Action> out;
  int lo = to_move == 0 ? 0 : 6;
  for (int i = 0; i < 6; ++i)
    if (d.houses[lo + i] > 0) out.push_back(i);
  return out;
}

GameState oware_apply(const GameState& s, Action a) {
  if (a < 0 || a >= 6) throw std::invalid_argument("oware: action out of range");
  const auto& d = s.oware();
  int origin = (s.to_move == 0 ? 0 : 6) + a;
  if (d.houses[origin] == 0) throw std::invalid_argument("oware: empty house");

  GameState n = s;
  auto& nd = std::get<OwareData>(n.data);
  int seeds = nd.houses[origin];
  nd.houses[origin] = 0;
  int pos = origin;
  while (seeds > 0) {
    pos = (pos + 1) % 12;
    if (pos == origin) pos = (pos + 1) % 12;  // origin is skipped on a full lap
    nd.houses[pos]++;
    seeds--;
  }

  // Backward capture chain through the opponent's row from the last house.
  if (!owns(s.to_move, pos) && (nd.houses[pos] == 2 || nd.houses[pos] == 3)) {
    int first = pos;
    int captured = 0;
    while (first >= 0 && !owns(s.to_move, first) &&
           (nd.houses[first] == 2 || nd.houses[first] == 3)) {
      captured += nd.houses[first];
      first--;
      if (first < 0) break;
    }
    first++;  // first captured house
    // Grand slam: taking every opponent seed forfeits the capture.
    if (captured < row_sum(nd, 1 - s.to_move)) {
      for (int h = first; h <= pos; ++h) nd.houses[h] = 0;
      nd.scores[s.to_move] = static_cast<uint8_t>(nd.scores[s.to_move] + captured);
    }
  }

  n.to_move = 1 - s.to_move;
  n.turn = s.turn + 1;
  return n;
}

Outcome oware_outcome(const GameState& s) {
  const auto& d = s.oware();
  if (d.scores[0] >= 25) return Outcome::win(0);
  if (d.scores[1] >= 25) return Outcome::win(1);
  if (d.scores[0] == 24 && d.scores[1] == 24) return Outcome::draw();
  if (s.turn >= kMaxPlies) return Outcome::draw();
  if (row_sum(d, s.to_move) == 0) {
    // No legal move: remaining seeds go to their owners, higher total wins.
    int total0 = d.scores[0] + row_sum(d, 0);
    int total1 = d.scores[1] + row_sum(d, 1);
    if (total0 > total1) return Outcome::win(0);
    if (total1 > total0) return Outcome::win(1);
    return Outcome::draw();
  }
  return Outcome::ongoing();
}

}  // namespace gzl::detail
