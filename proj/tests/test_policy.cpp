#include "cfrp/policy.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace cfrp;

namespace {

Hand hand_of(std::initializer_list<std::pair<TileKind, int>> spec) {
  Hand h;
  for (auto [kind, n] : spec)
    for (int i = 0; i < n; ++i) h.add(kind);
  return h;
}

// Straight-line restatement of the decision rule, kept deliberately naive.
// Quantities come from shanten/acceptance_count, which have their own
// oracles; this checks the selection logic on top of them.
ConcreteAction oracle_choice(const GameState& s, AbstractAction pattern) {
  auto legal = legal_actions(s);
  for (const ConcreteAction& a : legal)
    if (a.type == ActionType::Win) return a;
  const int p = s.to_act;

  if (s.phase == 2) {
    TileKind best = -1;
    int best_sh = 1000, best_acc = -1, best_honor = -1;
    for (const ConcreteAction& a : legal) {
      Hand h = s.hands[p];
      h.remove(a.tile);
      int sh = shanten(h, s.melds[p], pattern);
      int acc = acceptance_count(h, s.melds[p], pattern);
      int honor = is_honor(a.tile) ? 0 : 1;
      auto cand = std::tuple{sh, -acc, honor, a.tile};
      if (best < 0 || cand < std::tuple{best_sh, -best_acc, best_honor, best}) {
        best_sh = sh;
        best_acc = acc;
        best_honor = honor;
        best = a.tile;
      }
    }
    return {ActionType::Discard, best};
  }

  int pre = shanten(s.hands[p], s.melds[p], pattern);
  ConcreteAction best{ActionType::Pass, -1};
  int best_post = 1000;
  for (const ConcreteAction& a : legal) {
    if (a.type == ActionType::Pass) continue;
    if (a.type == ActionType::Chow && pattern != AbstractAction::Normal) continue;
    Hand h = s.hands[p];
    std::vector<Meld> m = s.melds[p];
    if (a.type == ActionType::Pong) {
      h.remove(*s.last_discard), h.remove(*s.last_discard);
      m.push_back({MeldType::Pong, *s.last_discard, true});
    } else if (a.type == ActionType::KongExposed) {
      for (int i = 0; i < 3; ++i) h.remove(*s.last_discard);
      m.push_back({MeldType::Kong, *s.last_discard, true});
    } else if (a.type == ActionType::KongConcealed) {
      for (int i = 0; i < 4; ++i) h.remove(a.tile);
      m.push_back({MeldType::Kong, a.tile, false});
    } else {
      for (TileKind k = a.tile; k < a.tile + 3; ++k)
        if (k != *s.last_discard) h.remove(k);
      m.push_back({MeldType::Chow, a.tile, true});
    }
    int post = shanten(h, m, pattern);
    if (post > pre || post >= kShantenImpossible) continue;
    if (post < best_post) best = a, best_post = post;
  }
  return best;
}

constexpr AbstractAction kAllPatterns[] = {AbstractAction::Normal,
                                           AbstractAction::PongPongHu,
                                           AbstractAction::QiDui};

}  // namespace

TEST_CASE("win is taken whenever legal, whatever the target") {
  GameState s;
  s.hands[1] = hand_of({{0, 1}, {1, 1}, {9, 3}, {10, 3}, {11, 3}, {14, 2}});
  s.hands[0] = hand_of({{2, 1}, {3, 3}, {4, 3}, {5, 3}, {6, 3}});
  s.wall.tail = 5;
  s.to_act = 1;
  s.phase = 0;
  s.last_discard = 2;
  s.discards[0].push_back(2);
  for (AbstractAction pattern : kAllPatterns)
    CHECK(choose_action(s, 1, pattern) == ConcreteAction{ActionType::Win, -1});
}

TEST_CASE("qidui target refuses every meld") {
  GameState s;
  s.hands[1] = hand_of({{4, 2}, {0, 2}, {1, 2}, {2, 2}, {8, 2}, {12, 2}, {15, 1}});
  s.hands[0] = hand_of({{5, 3}, {6, 3}, {7, 3}, {13, 2}, {14, 2}});
  s.wall.tail = 6;
  s.to_act = 1;
  s.phase = 0;
  s.last_discard = 4;
  s.discards[0].push_back(4);

  auto legal = legal_actions(s);
  CHECK(std::count(legal.begin(), legal.end(), ConcreteAction{ActionType::Pong, -1}) == 1);
  CHECK(choose_action(s, 1, AbstractAction::QiDui) == ConcreteAction{ActionType::Pass, -1});
  // The same seize helps a pong-oriented hand.
  CHECK(choose_action(s, 1, AbstractAction::PongPongHu) == ConcreteAction{ActionType::Pong, -1});
}

TEST_CASE("pongpong discards the tile that is not part of the structure") {
  GameState s;
  s.hands[0] = hand_of({{0, 3}, {1, 3}, {8, 3}, {9, 2}, {10, 2}, {4, 1}});
  s.hands[1] = hand_of({{5, 3}, {6, 3}, {7, 3}, {13, 2}, {14, 2}});
  s.wall.tail = 6;
  s.to_act = 0;
  s.phase = 2;
  CHECK(choose_action(s, 0, AbstractAction::PongPongHu) == ConcreteAction{ActionType::Discard, 4});
}

TEST_CASE("chow is considered only under the normal target") {
  GameState s;
  // C4 and C6 in hand, C5 discarded; chow is the only meld on offer. No
  // pair anywhere, so the seize cannot complete the hand.
  s.hands[1] = hand_of({{3, 1}, {5, 1}, {9, 3}, {10, 3}, {14, 1}, {15, 1}, {0, 1}, {1, 1}, {2, 1}});
  s.hands[0] = hand_of({{6, 3}, {7, 3}, {8, 3}, {12, 2}, {13, 2}});
  s.wall.tail = 6;
  s.to_act = 1;
  s.phase = 0;
  s.last_discard = 4;
  s.discards[0].push_back(4);

  auto legal = legal_actions(s);
  CHECK(std::count(legal.begin(), legal.end(), ConcreteAction{ActionType::Chow, 3}) == 1);
  CHECK(choose_action(s, 1, AbstractAction::Normal) == ConcreteAction{ActionType::Chow, 3});
  CHECK(choose_action(s, 1, AbstractAction::PongPongHu) == ConcreteAction{ActionType::Pass, -1});
  CHECK(choose_action(s, 1, AbstractAction::QiDui) == ConcreteAction{ActionType::Pass, -1});
}

TEST_CASE("equally useless honors go before characters, lowest index first") {
  GameState s;
  // Three junk singles: a wind, a dragon, and C9 whose run neighbors are
  // all visible in the player's own pongs below, so no draw revives it.
  s.hands[0] = hand_of({{0, 3}, {1, 3}, {2, 3}, {12, 2}, {8, 1}, {10, 1}, {14, 1}});
  s.hands[1] = hand_of({{4, 3}, {5, 3}, {6, 3}, {13, 2}, {15, 2}});
  s.wall.tail = 6;
  s.to_act = 0;
  s.phase = 2;
  ConcreteAction a = choose_action(s, 0, AbstractAction::Normal);
  ConcreteAction b = oracle_choice(s, AbstractAction::Normal);
  CHECK(a == b);
  CHECK(a.type == ActionType::Discard);
  CHECK(is_honor(a.tile));
}

TEST_CASE("invalid caller is rejected") {
  GameState s = new_game(shuffle_deal(3));
  CHECK_THROWS_AS(choose_action(s, 1, AbstractAction::Normal), std::logic_error);
}

TEST_CASE("fixed agents play legal, reproducible, zero-sum games") {
  for (AbstractAction pattern : kAllPatterns) {
    PlayerCallbacks raw = fixed_pattern_agent(pattern);
    PlayerCallbacks checked{[&](const GameState& s) {
                              ConcreteAction a = raw.act(s);
                              auto legal = legal_actions(s);
                              REQUIRE(std::count(legal.begin(), legal.end(), a) == 1);
                              return a;
                            },
                            nullptr};
    for (uint64_t seed = 0; seed < 120; ++seed) {
      GameState start = new_game(shuffle_deal(seed));
      PlayoutResult r = playout(start, checked, checked);
      CHECK(r.utility.first + r.utility.second == 0);
      REQUIRE(std::holds_alternative<EndEv>(r.log.events.back()));
      PlayoutResult again = playout(start, raw, raw);
      CHECK(again.utility == r.utility);
      CHECK(again.log == r.log);
    }
  }
}

TEST_CASE("a qidui agent never melds") {
  PlayerCallbacks qd = fixed_pattern_agent(AbstractAction::QiDui);
  PlayerCallbacks normal = fixed_pattern_agent(AbstractAction::Normal);
  for (uint64_t seed = 0; seed < 500; ++seed) {
    GameState start = new_game(shuffle_deal(seed));
    PlayerCallbacks probe{[&](const GameState& s) {
                            ConcreteAction a = qd.act(s);
                            REQUIRE(s.melds[s.to_act].empty());
                            return a;
                          },
                          nullptr};
    playout(start, probe, normal);
  }
}

TEST_CASE("choices match the naive restatement across sampled play") {
  std::mt19937 rng(41);
  int checked = 0;
  for (uint64_t seed = 0; seed < 150; ++seed) {
    AbstractAction mine = kAllPatterns[rng() % 3];
    AbstractAction theirs = kAllPatterns[rng() % 3];
    GameState s = new_game(shuffle_deal(seed * 7 + 1));
    while (!s.is_terminal()) {
      AbstractAction pattern = s.to_act == 0 ? mine : theirs;
      ConcreteAction a = choose_action(s, s.to_act, pattern);
      if (!s.awaiting_initial_draw()) {
        REQUIRE(a == oracle_choice(s, pattern));
        ++checked;
      }
      s = apply(s, a);
    }
  }
  CHECK(checked > 5000);
}

TEST_CASE("chosen discards minimize shanten over all alternatives") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    GameState s = new_game(shuffle_deal(seed + 9000));
    while (!s.is_terminal()) {
      ConcreteAction a = choose_action(s, s.to_act, AbstractAction::Normal);
      if (s.phase == 2) {
        Hand h = s.hands[s.to_act];
        h.remove(a.tile);
        int chosen = shanten(h, s.melds[s.to_act], AbstractAction::Normal);
        h.add(a.tile);
        for (TileKind k = 0; k < kNumKinds; ++k) {
          if (h.count(k) == 0) continue;
          h.remove(k);
          REQUIRE(shanten(h, s.melds[s.to_act], AbstractAction::Normal) >= chosen);
          h.add(k);
        }
      }
      s = apply(s, a);
    }
  }
}
