#pragma once

#include <string>
#include <utility>

#include "gzl/game.hpp"

namespace gzl {

// History-free canonical byte encoding of a state, used as the identity for
// frequency counting. Layout (documented in README under "File formats"):
//   byte 0          game id
//   bytes 1..       board bytes, row-major
//   next byte       player to move
//   trailing bytes  rule counters that affect value, big-endian
// Per game:
//   ConnectFour  42 board bytes (rows bottom-up, 0 empty / 1 / 2), no counters
//   Pentago      36 board bytes, no counters
//   Oware        12 house bytes, counters = score0, score1
//   Checkers     32 dark-square bytes, counter = forced-continuation square
//                (0xff when none)
//   ToyIdeal     board bytes = the move sequence, no counters
using ObservationKey = std::string;

ObservationKey observation_key(const GameState& s);

// Oware variant that drops the score counters, for counting raw seed
// configurations. Throws for other games.
ObservationKey observation_key_without_scores(const GameState& s);

// Decodes (player 0 captures, player 1 captures) from a key produced by
// observation_key. Supported for Oware and Checkers keys only.
std::pair<int, int> capture_counts_from_key(const ObservationKey& key);

std::string key_to_hex(const ObservationKey& key);
ObservationKey key_from_hex(const std::string& hex);

}  // namespace gzl
