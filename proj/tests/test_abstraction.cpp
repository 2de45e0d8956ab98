#include "cfrp/abstraction.hpp"

#include <set>
#include <stdexcept>

#include "cfrp/policy.hpp"
#include "doctest.h"

using namespace cfrp;

namespace {

Hand hand_of(std::initializer_list<std::pair<TileKind, int>> spec) {
  Hand h;
  for (auto [kind, n] : spec)
    for (int i = 0; i < n; ++i) h.add(kind);
  return h;
}

}  // namespace

TEST_CASE("feature extraction on a wind-heavy example hand") {
  GameState s;
  s.hands[0] = hand_of({{9, 4}, {10, 3}, {11, 2}, {12, 2}, {0, 2}, {2, 1}});
  s.hands[1] = hand_of({{3, 3}, {4, 3}, {5, 3}, {6, 2}, {7, 2}});
  s.wall.tail = 10;
  s.round = 1;
  s.turns = {1, 0};

  Features f = extract_features(s, 0);
  CHECK(f == Features{1, 3, 2, 3, 11});
  CHECK(encode(f) == 734401u);
  CHECK(decode(734401u) == f);
}

TEST_CASE("encoding bit layout") {
  CHECK(encode(Features{0, 0, 0, 0, 0}) == 0u);
  CHECK(encode(Features{38, 6, 4, 14, 0}) == 59814u);
  CHECK(encode(Features{0, 0, 0, 0, 14}) == 14u << 16);
  CHECK_THROWS_AS(encode(Features{39, 0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(encode(Features{0, 7, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(encode(Features{0, 0, 5, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(encode(Features{0, 0, 0, 15, 0}), std::invalid_argument);
  CHECK_THROWS_AS(encode(Features{0, 0, 0, 0, -1}), std::invalid_argument);
}

TEST_CASE("round-trip over the whole in-range space") {
  std::set<InfoSetKey> seen;
  for (int round = 0; round <= 38; ++round)
    for (int pairs = 0; pairs <= 6; ++pairs)
      for (int pk = 0; pk <= 4; ++pk)
        for (int chars = 0; chars <= 14; ++chars)
          for (int winds = 0; winds <= 14; ++winds) {
            Features f{round, pairs, pk, chars, winds};
            InfoSetKey k = encode(f);
            REQUIRE(decode(k) == f);
            seen.insert(k);
          }
  CHECK(seen.size() == 307125u);
}

TEST_CASE("features see only the player's own information") {
  GameState s;
  s.hands[0] = hand_of({{9, 4}, {10, 3}, {11, 2}, {12, 2}, {0, 2}, {2, 1}});
  s.hands[1] = hand_of({{3, 3}, {4, 3}, {5, 3}, {6, 2}, {7, 2}});
  s.wall.tail = 10;
  s.round = 5;
  Features before = extract_features(s, 0);

  s.hands[1] = hand_of({{13, 4}, {14, 4}, {15, 4}, {8, 1}});
  s.melds[1].push_back({MeldType::Kong, 6, false});
  s.discards[1] = {1, 2, 3};
  for (int i = 0; i < s.wall.tail; ++i) s.wall.tiles[i] = 8;
  CHECK(extract_features(s, 0) == before);
}

TEST_CASE("counting is indifferent to declaring a concealed quad") {
  GameState held;
  held.hands[0] = hand_of({{9, 4}, {0, 2}, {1, 3}, {3, 1}, {5, 1}, {13, 2}, {15, 1}});
  GameState declared;
  declared.hands[0] = hand_of({{0, 2}, {1, 3}, {3, 1}, {5, 1}, {13, 2}, {15, 1}});
  declared.melds[0].push_back({MeldType::Kong, 9, false});

  Features a = extract_features(held, 0);
  Features b = extract_features(declared, 0);
  CHECK(a.pairs == b.pairs);
  CHECK(a.pongs_kongs == b.pongs_kongs);
  CHECK(a.wind_tiles == b.wind_tiles);
  CHECK(a.pairs == 2);
  CHECK(a.pongs_kongs == 2);
  CHECK(a.wind_tiles == 4);
}

TEST_CASE("feature clamps engage on extreme hands") {
  GameState s;
  s.hands[0] = hand_of({{0, 2}, {1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}});
  Features f = extract_features(s, 0);
  CHECK(f.pairs == 6);
  CHECK(f.character_tiles == 14);

  GameState kongy;
  kongy.hands[0] = hand_of({{8, 2}});
  for (TileKind k = 0; k < 4; ++k) kongy.melds[0].push_back({MeldType::Kong, k, true});
  Features g = extract_features(kongy, 0);
  CHECK(g.pongs_kongs == 4);
  CHECK(g.character_tiles == 14);  // 18 owned, capped
}

TEST_CASE("abstract legality follows melds") {
  GameState s;
  CHECK(legal_abstract_actions(s, 0) == std::array<bool, 3>{true, true, true});
  s.melds[0].push_back({MeldType::Pong, 4, true});
  CHECK(legal_abstract_actions(s, 0) == std::array<bool, 3>{true, true, false});
  s.melds[0][0] = {MeldType::Kong, 4, false};
  CHECK(legal_abstract_actions(s, 0) == std::array<bool, 3>{true, true, false});
  s.melds[0][0] = {MeldType::Chow, 2, true};
  CHECK(legal_abstract_actions(s, 0) == std::array<bool, 3>{true, false, false});
  CHECK(legal_abstract_actions(s, 1)[2]);
}

TEST_CASE("decision points fire on the scheduled post-draw turns") {
  PlayerCallbacks agent = fixed_pattern_agent(AbstractAction::Normal);
  int fired[2] = {0, 0};
  for (uint64_t seed = 0; seed < 60; ++seed) {
    GameState s = new_game(shuffle_deal(seed));
    int per_game[2] = {0, 0};
    while (!s.is_terminal()) {
      for (int p = 0; p < 2; ++p) {
        bool expect = p == s.to_act && s.phase == 1 && !s.awaiting_initial_draw() &&
                      (s.turns[p] == 1 || s.turns[p] == 7 || s.turns[p] == 13);
        REQUIRE(is_decision_point(s, p) == expect);
        if (expect) ++per_game[p], ++fired[p];
      }
      s = apply(s, agent.act(s));
    }
    CHECK(per_game[0] <= 3);
    CHECK(per_game[1] <= 3);
    CHECK(per_game[0] >= 1);  // turn 1 always happens for the dealer
  }
  CHECK(fired[0] >= 60);
  CHECK(fired[1] >= 59);  // player 1 misses turn 1 only if the dealer wins at once
}

TEST_CASE("custom schedules are honored") {
  GameState s = new_game(shuffle_deal(11));
  s = apply(s, {ActionType::Pass, -1});  // first draw: turn 1 for player 0
  const int turns2[] = {2};
  CHECK(is_decision_point(s, 0));
  CHECK_FALSE(is_decision_point(s, 0, turns2));
  CHECK_FALSE(is_decision_point(s, 1));
}
