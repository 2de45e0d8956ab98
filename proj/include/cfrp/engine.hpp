#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cfrp/patterns.hpp"
#include "cfrp/tiles.hpp"

namespace cfrp {

// Concrete game actions. `tile` is the discarded kind for Discard, the run
// base for Chow, and the quad kind for KongConcealed; Pong, KongExposed and
// phase-0 Win act on the opponent's last discard, so tile stays -1.
enum class ActionType { Pass, Discard, Chow, Pong, KongExposed, KongConcealed, Win };

struct ConcreteAction {
  ActionType type = ActionType::Pass;
  TileKind tile = -1;

  bool operator==(const ConcreteAction& other) const = default;
};

struct TerminalInfo {
  std::optional<int> winner;  // empty on an exhausted wall
  WinPattern pattern = WinPattern::None;
  int points = 0;

  bool operator==(const TerminalInfo& other) const = default;
};

// Turn structure per player turn:
//   phase 0: react to the opponent's discard (seize, win, or pass)
//   phase 1: after drawing (concealed kong, win, or pass)
//   phase 2: discard
// Every transition into phase 1 performs the draw inside apply(). The single
// exception is the state new_game returns: the opening hand has not drawn
// yet, its only legal action is Pass, and that Pass executes the first draw.
struct GameState {
  std::array<Hand, 2> hands;
  std::array<std::vector<Meld>, 2> melds;
  std::array<std::vector<TileKind>, 2> discards;
  Wall wall;
  int to_act = 0;
  int phase = 1;
  std::optional<TileKind> last_discard;
  int round = 0;               // draws taken so far; always 38 - wall.size()
  std::array<int, 2> turns{};  // per-player count of phase-1 entries
  std::optional<TerminalInfo> terminal;

  bool is_terminal() const { return terminal.has_value(); }
  // True only for the pre-draw state produced by new_game.
  bool awaiting_initial_draw() const;
};

// Log events, one line each in the text encoding.
struct HandEv {
  int player;
  std::vector<TileKind> kinds;  // 13 entries, ascending
  bool operator==(const HandEv&) const = default;
};
struct DrawEv {
  int player;
  TileKind kind;
  bool from_back;
  bool operator==(const DrawEv&) const = default;
};
struct DiscardEv {
  int player;
  TileKind kind;
  bool operator==(const DiscardEv&) const = default;
};
struct ChowEv {
  int player;
  TileKind base;
  bool operator==(const ChowEv&) const = default;
};
struct PongEv {
  int player;
  TileKind kind;
  bool operator==(const PongEv&) const = default;
};
struct KongEv {
  int player;
  TileKind kind;
  bool concealed;
  bool operator==(const KongEv&) const = default;
};
struct PassEv {
  int player;
  int phase;
  bool operator==(const PassEv&) const = default;
};
struct PolicyEv {
  int player;
  int round;
  AbstractAction action;
  bool operator==(const PolicyEv&) const = default;
};
struct EndEv {
  std::optional<int> winner;
  WinPattern pattern = WinPattern::None;
  int points = 0;
  bool operator==(const EndEv&) const = default;
};

using LogEvent =
    std::variant<HandEv, DrawEv, DiscardEv, ChowEv, PongEv, KongEv, PassEv, PolicyEv, EndEv>;

struct GameLog {
  std::optional<uint64_t> seed;
  std::vector<LogEvent> events;

  bool operator==(const GameLog& other) const = default;
};

GameState new_game(const Deal& deal);

// Legal actions for the player to act, in a fixed canonical order
// (Win, Kongs, Pong, Chows by ascending base, Discards ascending, Pass last).
// Throws std::logic_error on a terminal state.
std::vector<ConcreteAction> legal_actions(const GameState& state);

// Applies one action. Throws std::logic_error with the phase and action named
// when the action is not legal in the state.
GameState apply(const GameState& state, const ConcreteAction& action);
GameState apply(const GameState& state, const ConcreteAction& action,
                std::vector<LogEvent>& events);

// Zero-sum utility of a terminal state: winner gets +points, loser -points,
// exhausted walls are 0/0. Throws std::logic_error on non-terminal states.
std::pair<int, int> terminal_utility(const GameState& state);

// One player's driver for playout. `act` picks among legal actions; when
// `policy_note` is set and returns a value, a POLICY event is recorded before
// the action (used by pattern-bound agents to log rebinding decisions).
struct PlayerCallbacks {
  std::function<ConcreteAction(const GameState&)> act;
  std::function<std::optional<AbstractAction>(const GameState&)> policy_note;
};

struct PlayoutResult {
  std::pair<int, int> utility;
  GameLog log;
};

// Runs a full game from `start`. When `start` is a fresh deal the log opens
// with both HAND events; the caller owns the SEED annotation.
PlayoutResult playout(const GameState& start, const PlayerCallbacks& player0,
                      const PlayerCallbacks& player1);

}  // namespace cfrp
