#pragma once

// Tiles visible anywhere in a state, counted per kind. Every kind must
// total exactly 4 copies after every legal transition.

#include <array>

#include "cfrp/engine.hpp"

namespace census {

inline std::array<int, cfrp::kNumKinds> tile_census(const cfrp::GameState& s) {
  using namespace cfrp;
  std::array<int, kNumKinds> n{};
  for (int p = 0; p < 2; ++p) {
    for (int k = 0; k < kNumKinds; ++k) n[k] += s.hands[p].count(k);
    for (const Meld& m : s.melds[p]) {
      if (m.type == MeldType::Chow)
        for (TileKind k = m.base; k < m.base + 3; ++k) ++n[k];
      else
        for (int i = 0; i < (m.type == MeldType::Kong ? 4 : 3); ++i) ++n[m.base];
    }
    for (TileKind k : s.discards[p]) ++n[k];
  }
  for (int i = s.wall.head; i < s.wall.tail; ++i) ++n[s.wall.tiles[i]];
  return n;
}

}  // namespace census
