#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfrp/tiles.hpp"

namespace cfrp {

// The three pattern targets a player can pursue. Canonical action order is
// Normal, PongPongHu, QiDui (indices 0, 1, 2) everywhere: strategy vectors,
// store records, reports.
enum class AbstractAction : int { Normal = 0, PongPongHu = 1, QiDui = 2 };

inline constexpr int kNumAbstractActions = 3;

// Tokens used in logs, store headers and CLI flags.
const char* abstract_action_token(AbstractAction a);
std::optional<AbstractAction> abstract_action_from_token(const std::string& token);

enum class WinPattern { None, Normal, PongPongHu, QiDui };

const char* win_pattern_token(WinPattern p);

enum class MeldType { Chow, Pong, Kong };

// A declared set. Chow: base is the lowest kind of the run (0..6, Characters
// only). Pong/Kong: base is the kind. Kong counts as a single meld unit; its
// fourth tile is excess over the 14-tile accounting.
struct Meld {
  MeldType type;
  TileKind base;
  bool exposed;

  bool operator==(const Meld& other) const = default;
};

struct WinResult {
  WinPattern pattern = WinPattern::None;
  int points = 0;

  bool operator==(const WinResult& other) const = default;
};

// Returned by shanten when the pattern cannot be completed from the given
// meld configuration (QiDui with any meld, PongPongHu with a Chow meld).
inline constexpr int kShantenImpossible = 99;

// Scores a 14-tile-equivalent hand (concealed count == 14 - 3 * melds).
// Preference when several patterns match: QiDui > PongPongHu > Normal.
// QiDui: zero melds and seven pairs, a count-4 kind contributing two pairs.
// PongPongHu: four Pong/Kong sets plus one eye. Normal: four sets plus eye.
// Points: QiDui 2, PongPongHu 2, Normal 1, no win 0.
WinResult evaluate_win(const Hand& hand, const std::vector<Meld>& melds);

// Minimal number of tile exchanges to reach a ready hand for the pattern.
// -1 means complete, 0 means one exchange from complete (for a 13-tile-
// equivalent hand: one draw away). Accepts 13- or 14-tile-equivalent hands.
// The metric is hand-internal: it does not consult the wall or opponent.
int shanten(const Hand& hand, const std::vector<Meld>& melds, AbstractAction pattern);

// Number of distinct kinds whose draw strictly decreases shanten, for a
// 13-tile-equivalent hand. Kinds already held four times are skipped (a
// fifth copy cannot exist). A complete hand yields 0.
int acceptance_count(const Hand& hand, const std::vector<Meld>& melds, AbstractAction pattern);

}  // namespace cfrp
