#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "cfrp/engine.hpp"

namespace cfrp {

// Hand summary used to cluster information sets. Ranges after clamping:
// round 0..38, pairs 0..6, pongs_kongs 0..4, tile counts 0..14.
struct Features {
  int round = 0;
  int pairs = 0;
  int pongs_kongs = 0;
  int character_tiles = 0;
  int wind_tiles = 0;

  bool operator==(const Features& other) const = default;
};

// 20-bit packing: round in bits 0-5, pairs 6-8, pongs/kongs 9-11,
// character tiles 12-15, wind tiles 16-19.
using InfoSetKey = uint32_t;

inline constexpr std::array<int, 3> kDefaultDecisionTurns{1, 7, 13};

// Summarizes the player's own view: concealed hand, own melds, and the
// round counter. Opponent and wall contents never enter the result.
Features extract_features(const GameState& state, int player);

InfoSetKey encode(const Features& f);
Features decode(InfoSetKey key);

// Mask over [Normal, PongPongHu, QiDui]. Normal is always available; a Chow
// meld rules out PongPongHu; any meld rules out QiDui.
std::array<bool, 3> legal_abstract_actions(const GameState& state, int player);

// True when the player has just drawn into one of their scheduled turns and
// may re-select the abstract action they pursue.
bool is_decision_point(const GameState& state, int player,
                       std::span<const int> decision_turns = kDefaultDecisionTurns);

}  // namespace cfrp
