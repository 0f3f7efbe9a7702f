#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gzl::c4 {

// Bitboard for Connect Four on a width x height grid, height+1 bits per
// column so that a full column carries a sentinel bit. Supports any geometry
// with width*(height+1) <= 64; the standard game is 7x6.
struct Board {
  uint64_t stones[2] = {0, 0};  // one bitboard per player
  int width = 7;
  int height = 6;

  Board() = default;
  Board(int w, int h) : width(w), height(h) {
    if (w < 1 || h < 1 || w * (h + 1) > 64)
      throw std::invalid_argument("connect4: unsupported board geometry");
  }

  int stride() const { return height + 1; }
  uint64_t column_mask(int col) const {
    return ((uint64_t{1} << height) - 1) << (col * stride());
  }
  uint64_t bottom_bit(int col) const { return uint64_t{1} << (col * stride()); }
  uint64_t top_bit(int col) const {
    return uint64_t{1} << (col * stride() + height - 1);
  }
  uint64_t mask() const { return stones[0] | stones[1]; }
  uint64_t full_mask() const {
    uint64_t m = 0;
    for (int c = 0; c < width; ++c) m |= column_mask(c);
    return m;
  }

  bool column_open(int col) const { return (mask() & top_bit(col)) == 0; }
  bool full() const { return mask() == full_mask(); }
  int disk_count() const { return __builtin_popcountll(mask()); }

  // Owner of cell (row 0 = bottom), -1 if empty.
  int cell(int row, int col) const {
    uint64_t bit = uint64_t{1} << (col * stride() + row);
    if (stones[0] & bit) return 0;
    if (stones[1] & bit) return 1;
    return -1;
  }

  void drop(int col, int player) {
    uint64_t bit = (mask() + bottom_bit(col)) & column_mask(col);
    stones[player] |= bit;
  }

  bool has_line(int player) const {
    uint64_t b = stones[player];
    const int s = stride();
    for (int shift : {1, s, s - 1, s + 1}) {
      uint64_t m = b & (b >> shift);
      if (m & (m >> (2 * shift))) return true;
    }
    return false;
  }

  // True if dropping in col gives `player` four in a row.
  bool wins_by_drop(int col, int player) const {
    Board t = *this;
    t.drop(col, player);
    return t.has_line(player);
  }

  // Canonical 64-bit position key: mover stones + occupancy + bottom row.
  // Injective for a fixed geometry.
  uint64_t key(int to_move) const {
    uint64_t bottom = 0;
    for (int c = 0; c < width; ++c) bottom |= bottom_bit(c);
    return stones[to_move] + mask() + bottom;
  }

  uint64_t mirrored(uint64_t b) const {
    uint64_t out = 0;
    for (int c = 0; c < width; ++c) {
      uint64_t col = (b >> (c * stride())) & ((uint64_t{1} << stride()) - 1);
      out |= col << ((width - 1 - c) * stride());
    }
    return out;
  }

  bool operator==(const Board& o) const {
    return stones[0] == o.stones[0] && stones[1] == o.stones[1] &&
           width == o.width && height == o.height;
  }

  std::string to_string() const {
    std::string s;
    for (int r = height - 1; r >= 0; --r) {
      for (int c = 0; c < width; ++c) {
        int v = cell(r, c);
        s += (v < 0 ? '.' : (v == 0 ? 'x' : 'o'));
      }
      s += '\n';
    }
    return s;
  }
};

}  // namespace gzl::c4
