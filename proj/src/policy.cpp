#include "cfrp/policy.hpp"

#include <limits>
#include <stdexcept>

namespace cfrp {
namespace {

// Shanten of the hand as it would stand if `action` were applied, ignoring
// any replacement draw. Melds are rebuilt locally; the engine state is not
// touched.
int post_meld_shanten(const GameState& s, const ConcreteAction& action,
                      AbstractAction pattern) {
  const int p = s.to_act;
  Hand h = s.hands[p];
  std::vector<Meld> melds = s.melds[p];
  switch (action.type) {
    case ActionType::Pong: {
      TileKind d = *s.last_discard;
      h.remove(d);
      h.remove(d);
      melds.push_back({MeldType::Pong, d, true});
      break;
    }
    case ActionType::KongExposed: {
      TileKind d = *s.last_discard;
      for (int i = 0; i < 3; ++i) h.remove(d);
      melds.push_back({MeldType::Kong, d, true});
      break;
    }
    case ActionType::Chow: {
      TileKind d = *s.last_discard;
      for (TileKind k = action.tile; k < action.tile + 3; ++k)
        if (k != d) h.remove(k);
      melds.push_back({MeldType::Chow, action.tile, true});
      break;
    }
    case ActionType::KongConcealed: {
      for (int i = 0; i < 4; ++i) h.remove(action.tile);
      melds.push_back({MeldType::Kong, action.tile, false});
      break;
    }
    default:
      throw std::logic_error("post_meld_shanten: not a meld action");
  }
  return shanten(h, melds, pattern);
}

ConcreteAction choose_meld_or_pass(const GameState& s,
                                   const std::vector<ConcreteAction>& legal,
                                   AbstractAction pattern) {
  const int p = s.to_act;
  const int pre = shanten(s.hands[p], s.melds[p], pattern);
  ConcreteAction best{ActionType::Pass, -1};
  int best_post = std::numeric_limits<int>::max();
  for (const ConcreteAction& a : legal) {
    if (a.type == ActionType::Pass) continue;
    if (a.type == ActionType::Chow && pattern != AbstractAction::Normal) continue;
    int post = post_meld_shanten(s, a, pattern);
    if (post > pre || post >= kShantenImpossible) continue;
    if (post < best_post) {
      best = a;
      best_post = post;
    }
  }
  return best;
}

ConcreteAction choose_discard(const GameState& s, AbstractAction pattern) {
  const int p = s.to_act;
  Hand h = s.hands[p];
  const std::vector<Meld>& melds = s.melds[p];
  TileKind best = -1;
  int best_sh = std::numeric_limits<int>::max();
  int best_accept = -1;
  for (TileKind k = 0; k < kNumKinds; ++k) {
    if (h.count(k) == 0) continue;
    h.remove(k);
    int sh = shanten(h, melds, pattern);
    if (sh < best_sh) {
      best = k;
      best_sh = sh;
      best_accept = -1;
    } else if (sh == best_sh) {
      if (best_accept < 0) {
        Hand prev = h;  // hand minus k; shift the removal onto the incumbent
        prev.add(k);
        prev.remove(best);
        best_accept = acceptance_count(prev, melds, pattern);
      }
      int accept = acceptance_count(h, melds, pattern);
      bool better = accept > best_accept ||
                    (accept == best_accept && is_honor(k) && !is_honor(best));
      if (better) {
        best = k;
        best_accept = accept;
      }
    }
    h.add(k);
  }
  return {ActionType::Discard, best};
}

}  // namespace

ConcreteAction choose_action(const GameState& state, int player, AbstractAction pattern) {
  if (player != state.to_act)
    throw std::logic_error("choose_action: player is not to act");
  auto legal = legal_actions(state);
  for (const ConcreteAction& a : legal)
    if (a.type == ActionType::Win) return a;
  if (state.phase == 2) return choose_discard(state, pattern);
  return choose_meld_or_pass(state, legal, pattern);
}

PlayerCallbacks fixed_pattern_agent(AbstractAction pattern) {
  return {[pattern](const GameState& s) { return choose_action(s, s.to_act, pattern); },
          nullptr};
}

}  // namespace cfrp
