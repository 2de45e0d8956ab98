#include "cfrp/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cfrp {

namespace {

const char* action_name(ActionType t) {
  switch (t) {
    case ActionType::Pass: return "Pass";
    case ActionType::Discard: return "Discard";
    case ActionType::Chow: return "Chow";
    case ActionType::Pong: return "Pong";
    case ActionType::KongExposed: return "KongExposed";
    case ActionType::KongConcealed: return "KongConcealed";
    case ActionType::Win: return "Win";
  }
  return "?";
}

// Executes a draw and enters phase 1 for state.to_act. An empty wall ends the
// game as drawn instead.
void draw_into_phase1(GameState& s, bool from_back, std::vector<LogEvent>* events) {
  if (s.wall.empty()) {
    s.terminal = TerminalInfo{std::nullopt, WinPattern::None, 0};
    if (events) events->push_back(EndEv{std::nullopt, WinPattern::None, 0});
    return;
  }
  TileKind k = from_back ? s.wall.draw_back() : s.wall.draw_front();
  s.hands[s.to_act].add(k);
  ++s.round;
  ++s.turns[s.to_act];
  s.phase = 1;
  if (events) events->push_back(DrawEv{s.to_act, k, from_back});
}

void seize_last_discard(GameState& s, TileKind expect) {
  int opp = 1 - s.to_act;
  if (s.discards[opp].empty() || s.discards[opp].back() != expect)
    throw std::logic_error("engine: last discard marker does not match the discard pile");
  s.discards[opp].pop_back();
  s.last_discard.reset();
}

void finish_win(GameState& s, std::vector<LogEvent>* events) {
  WinResult result = evaluate_win(s.hands[s.to_act], s.melds[s.to_act]);
  if (result.pattern == WinPattern::None)
    throw std::logic_error("engine: Win applied to a non-winning hand");
  s.terminal = TerminalInfo{s.to_act, result.pattern, result.points};
  if (events) events->push_back(EndEv{s.to_act, result.pattern, result.points});
}

GameState apply_impl(const GameState& state, const ConcreteAction& action,
                     std::vector<LogEvent>* events) {
  std::vector<ConcreteAction> legal = legal_actions(state);
  if (std::find(legal.begin(), legal.end(), action) == legal.end())
    throw std::logic_error(std::string("engine: illegal action ") + action_name(action.type) +
                           "(" + std::to_string(action.tile) + ") in phase " +
                           std::to_string(state.phase));

  GameState s = state;
  int p = s.to_act;
  switch (action.type) {
    case ActionType::Pass:
      if (s.awaiting_initial_draw()) {
        if (events) events->push_back(PassEv{p, 1});
        draw_into_phase1(s, false, events);
      } else if (s.phase == 0) {
        if (events) events->push_back(PassEv{p, 0});
        s.last_discard.reset();
        draw_into_phase1(s, false, events);
      } else {
        if (events) events->push_back(PassEv{p, 1});
        s.phase = 2;
      }
      break;
    case ActionType::Discard: {
      s.hands[p].remove(action.tile);
      s.discards[p].push_back(action.tile);
      s.last_discard = action.tile;
      s.to_act = 1 - p;
      s.phase = 0;
      if (events) events->push_back(DiscardEv{p, action.tile});
      break;
    }
    case ActionType::Chow: {
      TileKind d = *s.last_discard;
      seize_last_discard(s, d);
      for (TileKind k = action.tile; k < action.tile + 3; ++k)
        if (k != d) s.hands[p].remove(k);
      s.melds[p].push_back({MeldType::Chow, action.tile, true});
      s.phase = 2;
      if (events) events->push_back(ChowEv{p, action.tile});
      break;
    }
    case ActionType::Pong: {
      TileKind d = *s.last_discard;
      seize_last_discard(s, d);
      s.hands[p].remove(d);
      s.hands[p].remove(d);
      s.melds[p].push_back({MeldType::Pong, d, true});
      s.phase = 2;
      if (events) events->push_back(PongEv{p, d});
      break;
    }
    case ActionType::KongExposed: {
      TileKind d = *s.last_discard;
      seize_last_discard(s, d);
      for (int i = 0; i < 3; ++i) s.hands[p].remove(d);
      s.melds[p].push_back({MeldType::Kong, d, true});
      if (events) events->push_back(KongEv{p, d, false});
      draw_into_phase1(s, true, events);
      break;
    }
    case ActionType::KongConcealed: {
      for (int i = 0; i < 4; ++i) s.hands[p].remove(action.tile);
      s.melds[p].push_back({MeldType::Kong, action.tile, false});
      if (events) events->push_back(KongEv{p, action.tile, true});
      draw_into_phase1(s, true, events);
      break;
    }
    case ActionType::Win: {
      if (s.phase == 0) {
        TileKind d = *s.last_discard;
        seize_last_discard(s, d);
        s.hands[p].add(d);
      }
      finish_win(s, events);
      break;
    }
  }
  return s;
}

}  // namespace

bool GameState::awaiting_initial_draw() const {
  if (terminal || phase != 1) return false;
  return hands[to_act].total() == kHandTiles - 3 * static_cast<int>(melds[to_act].size());
}

GameState new_game(const Deal& deal) {
  InitialDeal setup = deal_initial(deal);
  GameState s;
  s.hands = setup.hands;
  s.wall = setup.wall;
  s.to_act = 0;
  s.phase = 1;
  s.round = 0;
  return s;
}

std::vector<ConcreteAction> legal_actions(const GameState& state) {
  if (state.is_terminal()) throw std::logic_error("legal_actions: terminal state");
  std::vector<ConcreteAction> out;
  const Hand& hand = state.hands[state.to_act];
  const std::vector<Meld>& melds = state.melds[state.to_act];

  if (state.awaiting_initial_draw()) {
    out.push_back({ActionType::Pass, -1});
    return out;
  }

  switch (state.phase) {
    case 0: {
      if (!state.last_discard)
        throw std::logic_error("legal_actions: phase 0 without a discard to react to");
      TileKind d = *state.last_discard;
      Hand with = hand;
      with.add(d);
      if (evaluate_win(with, melds).pattern != WinPattern::None)
        out.push_back({ActionType::Win, -1});
      if (hand.count(d) == 3) out.push_back({ActionType::KongExposed, -1});
      if (hand.count(d) >= 2) out.push_back({ActionType::Pong, -1});
      if (is_character(d)) {
        for (TileKind b = std::max(0, d - 2); b <= std::min(6, static_cast<int>(d)); ++b) {
          bool have = true;
          for (TileKind k = b; k < b + 3; ++k)
            if (k != d && hand.count(k) == 0) have = false;
          if (have) out.push_back({ActionType::Chow, b});
        }
      }
      out.push_back({ActionType::Pass, -1});
      break;
    }
    case 1: {
      if (evaluate_win(hand, melds).pattern != WinPattern::None)
        out.push_back({ActionType::Win, -1});
      for (TileKind k = 0; k < kNumKinds; ++k)
        if (hand.count(k) == kCopiesPerKind) out.push_back({ActionType::KongConcealed, k});
      out.push_back({ActionType::Pass, -1});
      break;
    }
    case 2: {
      for (TileKind k = 0; k < kNumKinds; ++k)
        if (hand.count(k) > 0) out.push_back({ActionType::Discard, k});
      break;
    }
    default:
      throw std::logic_error("legal_actions: bad phase " + std::to_string(state.phase));
  }
  return out;
}

GameState apply(const GameState& state, const ConcreteAction& action) {
  return apply_impl(state, action, nullptr);
}

GameState apply(const GameState& state, const ConcreteAction& action,
                std::vector<LogEvent>& events) {
  return apply_impl(state, action, &events);
}

std::pair<int, int> terminal_utility(const GameState& state) {
  if (!state.is_terminal()) throw std::logic_error("terminal_utility: state is not terminal");
  const TerminalInfo& t = *state.terminal;
  if (!t.winner) return {0, 0};
  int u = t.points;
  return *t.winner == 0 ? std::pair<int, int>{u, -u} : std::pair<int, int>{-u, u};
}

PlayoutResult playout(const GameState& start, const PlayerCallbacks& player0,
                      const PlayerCallbacks& player1) {
  PlayoutResult result;
  if (start.awaiting_initial_draw() && start.round == 0) {
    for (int p = 0; p < 2; ++p) {
      HandEv ev{p, {}};
      for (TileKind k = 0; k < kNumKinds; ++k)
        for (int i = 0; i < start.hands[p].count(k); ++i) ev.kinds.push_back(k);
      result.log.events.push_back(std::move(ev));
    }
  }

  GameState state = start;
  // A game is a few hundred transitions at most; anything past this bound is
  // an engine bug, not a long game.
  for (int step = 0; step < 2000; ++step) {
    if (state.is_terminal()) {
      result.utility = terminal_utility(state);
      return result;
    }
    const PlayerCallbacks& cb = state.to_act == 0 ? player0 : player1;
    if (cb.policy_note) {
      if (std::optional<AbstractAction> note = cb.policy_note(state))
        result.log.events.push_back(PolicyEv{state.to_act, state.round, *note});
    }
    state = apply(state, cb.act(state), result.log.events);
  }
  throw std::logic_error("playout: game did not terminate");
}

}  // namespace cfrp
