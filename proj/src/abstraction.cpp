#include "cfrp/abstraction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cfrp {
namespace {

void require_range(const char* name, int value, int hi) {
  if (value < 0 || value > hi)
    throw std::invalid_argument(std::string("encode: ") + name + " = " +
                                std::to_string(value) + " outside 0.." + std::to_string(hi));
}

}  // namespace

Features extract_features(const GameState& state, int player) {
  const Hand& h = state.hands[player];
  Features f;
  f.round = state.round;
  for (TileKind k = 0; k < kNumKinds; ++k) {
    int c = h.count(k);
    if (c == 2) ++f.pairs;
    if (c >= 3) ++f.pongs_kongs;
    if (is_character(k)) f.character_tiles += c;
    if (is_wind(k)) f.wind_tiles += c;
  }
  for (const Meld& m : state.melds[player]) {
    if (m.type == MeldType::Chow) {
      f.character_tiles += 3;
      continue;
    }
    ++f.pongs_kongs;
    int tiles = m.type == MeldType::Kong ? 4 : 3;
    if (is_character(m.base)) f.character_tiles += tiles;
    if (is_wind(m.base)) f.wind_tiles += tiles;
  }
  f.pairs = std::min(f.pairs, 6);
  f.pongs_kongs = std::min(f.pongs_kongs, 4);
  f.character_tiles = std::min(f.character_tiles, 14);
  f.wind_tiles = std::min(f.wind_tiles, 14);
  return f;
}

InfoSetKey encode(const Features& f) {
  require_range("round", f.round, 38);
  require_range("pairs", f.pairs, 6);
  require_range("pongs_kongs", f.pongs_kongs, 4);
  require_range("character_tiles", f.character_tiles, 14);
  require_range("wind_tiles", f.wind_tiles, 14);
  return static_cast<InfoSetKey>(f.round) | static_cast<InfoSetKey>(f.pairs) << 6 |
         static_cast<InfoSetKey>(f.pongs_kongs) << 9 |
         static_cast<InfoSetKey>(f.character_tiles) << 12 |
         static_cast<InfoSetKey>(f.wind_tiles) << 16;
}

Features decode(InfoSetKey key) {
  Features f;
  f.round = key & 0x3F;
  f.pairs = key >> 6 & 0x7;
  f.pongs_kongs = key >> 9 & 0x7;
  f.character_tiles = key >> 12 & 0xF;
  f.wind_tiles = key >> 16 & 0xF;
  return f;
}

std::array<bool, 3> legal_abstract_actions(const GameState& state, int player) {
  bool any_meld = !state.melds[player].empty();
  bool any_chow = std::any_of(state.melds[player].begin(), state.melds[player].end(),
                              [](const Meld& m) { return m.type == MeldType::Chow; });
  return {true, !any_chow, !any_meld};
}

bool is_decision_point(const GameState& state, int player,
                       std::span<const int> decision_turns) {
  if (state.is_terminal() || state.to_act != player || state.phase != 1) return false;
  if (state.awaiting_initial_draw()) return false;
  return std::find(decision_turns.begin(), decision_turns.end(), state.turns[player]) !=
         decision_turns.end();
}

}  // namespace cfrp
