#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cfrp/bigint.hpp"

namespace cfrp {

// Tile kinds, 16 in total, 4 copies each:
//   0..8   Characters 1..9
//   9..12  Winds East, South, West, North
//   13..15 Dragons Red, Green, White
using TileKind = int;

inline constexpr int kNumKinds = 16;
inline constexpr int kCopiesPerKind = 4;
inline constexpr int kNumTiles = 64;
inline constexpr int kHandTiles = 13;
inline constexpr int kWallTiles = 38;

inline bool is_character(TileKind k) { return k >= 0 && k <= 8; }
inline bool is_wind(TileKind k) { return k >= 9 && k <= 12; }
inline bool is_dragon(TileKind k) { return k >= 13 && k <= 15; }
inline bool is_honor(TileKind k) { return k >= 9 && k <= 15; }
inline bool is_valid_kind(TileKind k) { return k >= 0 && k < kNumKinds; }

// Short display names: C1..C9, E, S, W, N, Rd, Gr, Wh.
const char* kind_name(TileKind k);

// Multiset of concealed tiles, one count per kind, each in 0..4.
struct Hand {
  std::array<int8_t, kNumKinds> counts{};

  int count(TileKind k) const { return counts[k]; }
  int total() const;
  void add(TileKind k);     // throws if the kind already has 4 copies
  void remove(TileKind k);  // throws if the kind has no copies

  bool operator==(const Hand& other) const = default;
};

// Live portion of the wall. Normal draws consume from the front, Kong
// replacement draws from the back.
struct Wall {
  std::array<int8_t, kWallTiles> tiles{};
  int head = 0;
  int tail = 0;

  int size() const { return tail - head; }
  bool empty() const { return head == tail; }
  TileKind peek_front() const;
  TileKind draw_front();
  TileKind draw_back();

  bool operator==(const Wall& other) const = default;
};

// A full shuffled game: a permutation of the 64 tiles plus the seed that
// produced it (seed is metadata; deals loaded from text keep seed 0).
struct Deal {
  uint64_t seed = 0;
  std::array<int8_t, kNumTiles> tiles{};

  bool operator==(const Deal& other) const = default;
};

struct InitialDeal {
  std::array<Hand, 2> hands;
  Wall wall;
};

// Deterministic, portable generator used everywhere randomness is needed.
// SplitMix64 with the standard constants; the sequence is part of the file
// and reproducibility contract and must not change.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  // Uniform in [0, bound) via modulo; bound must be nonzero.
  uint64_t next_below(uint64_t bound);
  // Uniform in [0, 1) with 53 random bits.
  double next_double();
};

// Fisher-Yates over the ascending 64-tile array driven by SplitMix64(seed),
// swapping index i (from 63 down to 1) with next() % (i + 1).
Deal shuffle_deal(uint64_t seed);

// First 13 tiles to player 0, next 13 to player 1, remaining 38 form the
// wall in order. Throws std::invalid_argument on a malformed deal.
InitialDeal deal_initial(const Deal& deal);

// Text encoding: one line of 64 space-separated kind indices.
std::string deal_to_line(const Deal& deal);
Deal deal_from_line(const std::string& line);

struct ComplexityBounds {
  BigUint deal_count;      // 64! / (4!)^16
  BigUint tree_leaves_lb;  // 14^38
  BigUint abstract_leaves; // 3^38
};

ComplexityBounds complexity_bounds();

}  // namespace cfrp
