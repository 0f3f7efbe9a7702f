#include "gzl/observation.hpp"

#include <stdexcept>

namespace gzl {

namespace {

void append_board_bytes(const GameState& s, ObservationKey& key) {
  switch (s.id) {
    case GameId::ConnectFour: {
      const auto& b = s.c4().board;
      for (int r = 0; r < b.height; ++r)
        for (int c = 0; c < b.width; ++c)
          key.push_back(static_cast<char>(b.cell(r, c) + 1));
      break;
    }
    case GameId::Pentago: {
      const auto& d = s.pentago();
      for (int cell = 0; cell < 36; ++cell) {
        uint64_t bit = uint64_t{1} << cell;
        key.push_back(d.stones[0] & bit ? 1 : d.stones[1] & bit ? 2 : 0);
      }
      break;
    }
    case GameId::Oware: {
      const auto& d = s.oware();
      for (uint8_t h : d.houses) key.push_back(static_cast<char>(h));
      break;
    }
    case GameId::Checkers: {
      const auto& d = s.checkers();
      for (uint8_t c : d.cells) key.push_back(static_cast<char>(c));
      break;
    }
    case GameId::ToyIdeal: {
      const auto& d = s.toy();
      for (uint8_t m : d.seq) key.push_back(static_cast<char>(m));
      break;
    }
  }
}

}  // namespace

ObservationKey observation_key(const GameState& s) {
  ObservationKey key;
  key.reserve(48);
  key.push_back(static_cast<char>(s.id));
  append_board_bytes(s, key);
  key.push_back(static_cast<char>(s.to_move));
  if (s.id == GameId::Oware) {
    key.push_back(static_cast<char>(s.oware().scores[0]));
    key.push_back(static_cast<char>(s.oware().scores[1]));
  } else if (s.id == GameId::Checkers) {
    key.push_back(static_cast<char>(s.checkers().continuation));
  }
  return key;
}

ObservationKey observation_key_without_scores(const GameState& s) {
  if (s.id != GameId::Oware)
    throw std::invalid_argument("observation_key_without_scores: Oware only");
  ObservationKey key;
  key.reserve(16);
  key.push_back(static_cast<char>(s.id));
  append_board_bytes(s, key);
  key.push_back(static_cast<char>(s.to_move));
  return key;
}

std::pair<int, int> capture_counts_from_key(const ObservationKey& key) {
  if (key.empty()) throw std::invalid_argument("capture_counts_from_key: empty key");
  auto id = static_cast<GameId>(static_cast<uint8_t>(key[0]));
  if (id == GameId::Oware) {
    if (key.size() != 16) throw std::invalid_argument("capture_counts_from_key: bad Oware key");
    return {static_cast<uint8_t>(key[14]), static_cast<uint8_t>(key[15])};
  }
  if (id == GameId::Checkers) {
    if (key.size() != 35) throw std::invalid_argument("capture_counts_from_key: bad Checkers key");
    int pieces[2] = {0, 0};
    for (int i = 1; i <= 32; ++i) {
      uint8_t c = static_cast<uint8_t>(key[i]);
      if (c == 1 || c == 2) pieces[0]++;
      if (c == 3 || c == 4) pieces[1]++;
    }
    return {12 - pieces[1], 12 - pieces[0]};
  }
  throw std::invalid_argument("capture_counts_from_key: unsupported game");
}

std::string key_to_hex(const ObservationKey& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.size() * 2);
  for (unsigned char b : key) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

ObservationKey key_from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("key_from_hex: odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("key_from_hex: bad digit");
  };
  ObservationKey out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return out;
}

std::string to_string(const GameState& s) {
  std::string out = game_name(s.id);
  out += " turn=" + std::to_string(s.turn) + " to_move=" + std::to_string(s.to_move) + "\n";
  switch (s.id) {
    case GameId::ConnectFour:
      out += s.c4().board.to_string();
      break;
    case GameId::Pentago: {
      const auto& d = s.pentago();
      for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) {
          uint64_t bit = uint64_t{1} << (r * 6 + c);
          out += d.stones[0] & bit ? 'x' : d.stones[1] & bit ? 'o' : '.';
        }
        out += '\n';
      }
      break;
    }
    case GameId::Oware: {
      const auto& d = s.oware();
      out += "  ";
      for (int h = 11; h >= 6; --h) out += std::to_string(d.houses[h]) + " ";
      out += "(p1 score " + std::to_string(d.scores[1]) + ")\n  ";
      for (int h = 0; h < 6; ++h) out += std::to_string(d.houses[h]) + " ";
      out += "(p0 score " + std::to_string(d.scores[0]) + ")\n";
      break;
    }
    case GameId::Checkers: {
      const auto& d = s.checkers();
      const char* glyph = ".mkMK";
      for (int r = 7; r >= 0; --r) {
        for (int c = 0; c < 8; ++c) {
          if ((r + c) % 2 == 0) {
            out += ' ';
          } else {
            out += glyph[d.cells[r * 4 + c / 2]];
          }
        }
        out += '\n';
      }
      if (d.continuation != 0xff)
        out += "continuation at " + std::to_string(d.continuation) + "\n";
      break;
    }
    case GameId::ToyIdeal: {
      out += "seq:";
      for (uint8_t m : s.toy().seq) out += " " + std::to_string(m);
      out += '\n';
      break;
    }
  }
  return out;
}

}  // namespace gzl
