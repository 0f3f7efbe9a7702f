#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gzl/connect4_board.hpp"

namespace gzl {

using Action = int;

enum class GameId : uint8_t {
  ConnectFour = 1,
  Pentago = 2,
  Oware = 3,
  Checkers = 4,
  ToyIdeal = 5,
};

const char* game_name(GameId id);
std::optional<GameId> game_from_name(const std::string& name);

struct Outcome {
  enum class Kind : uint8_t { Ongoing, Draw, Win };
  Kind kind = Kind::Ongoing;
  int winner = -1;  // only meaningful for Kind::Win

  bool terminal() const { return kind != Kind::Ongoing; }
  static Outcome ongoing() { return {Kind::Ongoing, -1}; }
  static Outcome draw() { return {Kind::Draw, -1}; }
  static Outcome win(int player) { return {Kind::Win, player}; }
  bool operator==(const Outcome& o) const = default;
};

// Parameters of the constant-branching fixed-length toy game. `prefs` is an
// optional per-branch probability vector consumed by the biased policy; it is
// not part of the game state.
struct ToyParams {
  int branching = 2;
  int length = 1;
  std::vector<double> prefs;  // empty = uniform

  void validate() const;
};

struct ConnectFourData {
  c4::Board board{7, 6};
  bool operator==(const ConnectFourData&) const = default;
};

struct PentagoData {
  uint64_t stones[2] = {0, 0};  // 36-bit masks, cell index r*6+c
  bool operator==(const PentagoData&) const = default;
};

struct OwareData {
  std::array<uint8_t, 12> houses{};  // 0..5 player 0, 6..11 player 1, sown ascending
  std::array<uint8_t, 2> scores{};
  bool operator==(const OwareData&) const = default;
};

struct CheckersData {
  // 32 dark squares, row-major over dark cells. 0 empty, 1/2 man/king of
  // player 0, 3/4 man/king of player 1.
  std::array<uint8_t, 32> cells{};
  uint8_t continuation = 0xff;  // square that must continue jumping, 0xff = none
  uint16_t plies_since_capture = 0;
  bool operator==(const CheckersData&) const = default;
};

struct ToyData {
  uint16_t branching = 2;
  uint16_t length = 1;
  std::vector<uint8_t> seq;
  bool operator==(const ToyData&) const = default;
};

// Immutable value: apply() returns a fresh successor. Safe to copy across
// workers; no shared mutable state.
struct GameState {
  GameId id = GameId::ConnectFour;
  int to_move = 0;
  int turn = 0;  // number of apply() calls since new_game()
  std::variant<ConnectFourData, PentagoData, OwareData, CheckersData, ToyData> data;

  const ConnectFourData& c4() const { return std::get<ConnectFourData>(data); }
  const PentagoData& pentago() const { return std::get<PentagoData>(data); }
  const OwareData& oware() const { return std::get<OwareData>(data); }
  const CheckersData& checkers() const { return std::get<CheckersData>(data); }
  const ToyData& toy() const { return std::get<ToyData>(data); }

  bool operator==(const GameState&) const = default;
};

GameState new_game(GameId id, std::optional<ToyParams> params = std::nullopt);

// Legal action indices for a non-terminal state, ascending. Throws on
// terminal input.
std::vector<Action> legal_actions(const GameState& s);
void legal_actions(const GameState& s, std::vector<Action>& out);

// Successor state; `a` must be in legal_actions(s).
GameState apply(const GameState& s, Action a);

Outcome outcome(const GameState& s);

// (player 0 captures, player 1 captures); Oware counts seeds, Checkers counts
// pieces removed. Throws for other games.
std::pair<int, int> capture_counts(const GameState& s);

std::string to_string(const GameState& s);

// Direct state constructors for tests and tooling. Inputs are validated
// against the per-game invariants.
GameState make_connect_four_state(const c4::Board& board, int to_move, int turn);
GameState make_oware_state(const std::array<uint8_t, 12>& houses,
                           const std::array<uint8_t, 2>& scores, int to_move,
                           int turn);
GameState make_checkers_state(const std::array<uint8_t, 32>& cells, int to_move,
                              int turn, uint8_t continuation = 0xff,
                              uint16_t plies_since_capture = 0);
GameState make_pentago_state(uint64_t stones0, uint64_t stones1, int to_move,
                             int turn);

namespace detail {
// Per-game helpers shared between apply/legal/outcome implementations.
std::vector<Action> pentago_legal(const PentagoData& d);
GameState pentago_apply(const GameState& s, Action a);
Outcome pentago_outcome(const GameState& s);
bool pentago_has_five(uint64_t stones);

std::vector<Action> oware_legal(const OwareData& d, int to_move);
GameState oware_apply(const GameState& s, Action a);
Outcome oware_outcome(const GameState& s);

std::vector<Action> checkers_legal(const CheckersData& d, int to_move);
GameState checkers_apply(const GameState& s, Action a);
Outcome checkers_outcome(const GameState& s);
}  // namespace detail

}  // namespace gzl
