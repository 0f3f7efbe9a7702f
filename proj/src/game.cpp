#include "gzl/game.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gzl {

const char* game_name(GameId id) {
  switch (id) {
    case GameId::ConnectFour: return "connect4";
    case GameId::Pentago: return "pentago";
    case GameId::Oware: return "oware";
    case GameId::Checkers: return "checkers";
    case GameId::ToyIdeal: return "toy";
  }
  throw std::invalid_argument("game_name: unknown game id");
}

std::optional<GameId> game_from_name(const std::string& name) {
  if (name == "connect4") return GameId::ConnectFour;
  if (name == "pentago") return GameId::Pentago;
  if (name == "oware") return GameId::Oware;
  if (name == "checkers") return GameId::Checkers;
  if (name == "toy") return GameId::ToyIdeal;
  return std::nullopt;
}

void ToyParams::validate() const {
  if (branching < 2 || branching > 256)
    throw std::invalid_argument("toy: branching factor must be in [2, 256]");
  if (length < 1 || length > 65535)
    throw std::invalid_argument("toy: game length must be in [1, 65535]");
  if (!prefs.empty()) {
    if (static_cast<int>(prefs.size()) != branching)
      throw std::invalid_argument("toy: prefs length must equal branching factor");
    double sum = 0.0;
    for (double p : prefs) {
      if (!(p >= 0.0)) throw std::invalid_argument("toy: prefs must be nonnegative");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("toy: prefs must sum to 1");
  }
}

GameState new_game(GameId id, std::optional<ToyParams> params) {
  if (id == GameId::ToyIdeal) {
    if (!params) throw std::invalid_argument("new_game: ToyIdeal requires ToyParams");
    params->validate();
    GameState s;
    s.id = id;
    s.data = ToyData{static_cast<uint16_t>(params->branching),
                     static_cast<uint16_t>(params->length),
                     {}};
    return s;
  }
  if (params) throw std::invalid_argument("new_game: ToyParams only valid for ToyIdeal");

  GameState s;
  s.id = id;
  switch (id) {
    case GameId::ConnectFour:
      s.data = ConnectFourData{};
      break;
    case GameId::Pentago:
      s.data = PentagoData{};
      break;
    case GameId::Oware: {
      OwareData d;
      d.houses.fill(4);
      s.data = d;
      break;
    }
    case GameId::Checkers: {
      CheckersData d;
      for (int sq = 0; sq < 12; ++sq) d.cells[sq] = 1;        // player 0 men
      for (int sq = 20; sq < 32; ++sq) d.cells[sq] = 3;       // player 1 men
      s.data = d;
      break;
    }
    default:
      throw std::invalid_argument("new_game: unknown game id");
  }
  return s;
}

namespace {

void connect4_legal(const ConnectFourData& d, std::vector<Action>& out) {
  for (int c = 0; c < d.board.width; ++c)
    if (d.board.column_open(c)) out.push_back(c);
}

GameState connect4_apply(const GameState& s, Action a) {
  const auto& d = s.c4();
  if (a < 0 || a >= d.board.width || !d.board.column_open(a))
    throw std::invalid_argument("connect4: illegal column");
  GameState n = s;
  std::get<ConnectFourData>(n.data).board.drop(a, s.to_move);
  n.to_move = 1 - s.to_move;
  n.turn = s.turn + 1;
  return n;
}

Outcome connect4_outcome(const GameState& s) {
  const auto& b = s.c4().board;
  if (b.has_line(0)) return Outcome::win(0);
  if (b.has_line(1)) return Outcome::win(1);
  if (b.full()) return Outcome::draw();
  return Outcome::ongoing();
}

void toy_legal(const ToyData& d, std::vector<Action>& out) {
  for (int i = 0; i < d.branching; ++i) out.push_back(i);
}

GameState toy_apply(const GameState& s, Action a) {
  const auto& d = s.toy();
  if (a < 0 || a >= d.branching) throw std::invalid_argument("toy: illegal branch");
  GameState n = s;
  std::get<ToyData>(n.data).seq.push_back(static_cast<uint8_t>(a));
  n.to_move = 1 - s.to_move;
  n.turn = s.turn + 1;
  return n;
}

Outcome toy_outcome(const GameState& s) {
  return s.turn >= s.toy().length ? Outcome::draw() : Outcome::ongoing();
}

}  // namespace

void legal_actions(const GameState& s, std::vector<Action>& out) {
  out.clear();
  if (outcome(s).terminal())
    throw std::logic_error("legal_actions: called on terminal state");
  switch (s.id) {
    case GameId::ConnectFour: connect4_legal(s.c4(), out); break;
    case GameId::Pentago: out = detail::pentago_legal(s.pentago()); break;
    case GameId::Oware: out = detail::oware_legal(s.oware(), s.to_move); break;
    case GameId::Checkers: out = detail::checkers_legal(s.checkers(), s.to_move); break;
    case GameId::ToyIdeal: toy_legal(s.toy(), out); break;
  }
}

std::vector<Action> legal_actions(const GameState& s) {
  std::vector<Action> out;
  legal_actions(s, out);
  return out;
}

GameState apply(const GameState& s, Action a) {
  switch (s.id) {
    case GameId::ConnectFour: return connect4_apply(s, a);
    case GameId::Pentago: return detail::pentago_apply(s, a);
    case GameId::Oware: return detail::oware_apply(s, a);
    case GameId::Checkers: return detail::checkers_apply(s, a);
    case GameId::ToyIdeal: return toy_apply(s, a);
  }
  throw std::invalid_argument("apply: unknown game id");
}

Outcome outcome(const GameState& s) {
  switch (s.id) {
    case GameId::ConnectFour: return connect4_outcome(s);
    case GameId::Pentago: return detail::pentago_outcome(s);
    case GameId::Oware: return detail::oware_outcome(s);
    case GameId::Checkers: return detail::checkers_outcome(s);
    case GameId::ToyIdeal: return toy_outcome(s);
  }
  throw std::invalid_argument("outcome: unknown game id");
}

std::pair<int, int> capture_counts(const GameState& s) {
  if (s.id == GameId::Oware) {
    const auto& d = s.oware();
    return {d.scores[0], d.scores[1]};
  }
  if (s.id == GameId::Checkers) {
    const auto& d = s.checkers();
    int pieces[2] = {0, 0};
    for (uint8_t c : d.cells) {
      if (c == 1 || c == 2) pieces[0]++;
      if (c == 3 || c == 4) pieces[1]++;
    }
    return {12 - pieces[1], 12 - pieces[0]};
  }
  throw std::invalid_argument("capture_counts: only Oware and Checkers track captures");
}

GameState make_connect_four_state(const c4::Board& board, int to_move, int turn) {
  if (board.width != 7 || board.height != 6)
    throw std::invalid_argument("make_connect_four_state: engine board is 7x6");
  if (board.disk_count() != turn)
    throw std::invalid_argument("make_connect_four_state: disk count must equal turn");
  if (to_move != (turn & 1))
    throw std::invalid_argument("make_connect_four_state: to_move inconsistent with turn");
  GameState s;
  s.id = GameId::ConnectFour;
  s.to_move = to_move;
  s.turn = turn;
  s.data = ConnectFourData{board};
  return s;
}

GameState make_oware_state(const std::array<uint8_t, 12>& houses,
                           const std::array<uint8_t, 2>& scores, int to_move,
                           int turn) {
  int total = scores[0] + scores[1];
  for (uint8_t h : houses) total += h;
  if (total != 48) throw std::invalid_argument("make_oware_state: seeds must total 48");
  if (to_move != 0 && to_move != 1) throw std::invalid_argument("make_oware_state: bad player");
  GameState s;
  s.id = GameId::Oware;
  s.to_move = to_move;
  s.turn = turn;
  s.data = OwareData{houses, scores};
  return s;
}

GameState make_checkers_state(const std::array<uint8_t, 32>& cells, int to_move,
                              int turn, uint8_t continuation,
                              uint16_t plies_since_capture) {
  int pieces[2] = {0, 0};
  for (uint8_t c : cells) {
    if (c > 4) throw std::invalid_argument("make_checkers_state: bad cell value");
    if (c == 1 || c == 2) pieces[0]++;
    if (c == 3 || c == 4) pieces[1]++;
  }
  if (pieces[0] > 12 || pieces[1] > 12)
    throw std::invalid_argument("make_checkers_state: more than 12 pieces");
  GameState s;
  s.id = GameId::Checkers;
  s.to_move = to_move;
  s.turn = turn;
  s.data = CheckersData{cells, continuation, plies_since_capture};
  return s;
}

GameState make_pentago_state(uint64_t stones0, uint64_t stones1, int to_move,
                             int turn) {
  const uint64_t board_mask = (uint64_t{1} << 36) - 1;
  if ((stones0 & ~board_mask) || (stones1 & ~board_mask) || (stones0 & stones1))
    throw std::invalid_argument("make_pentago_state: invalid stone masks");
  GameState s;
  s.id = GameId::Pentago;
  s.to_move = to_move;
  s.turn = turn;
  s.data = PentagoData{{stones0, stones1}};
  return s;
}

}  // namespace gzl
