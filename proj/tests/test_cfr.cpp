#include "cfrp/cfr.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "profile_oracle.h"

using namespace cfrp;

namespace {

constexpr std::array<bool, 3> kAllLegal{true, true, true};

MatrixGame rps() { return {{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}}; }

double linf_from_uniform(const std::vector<double>& strategy) {
  double worst = 0;
  for (double p : strategy) worst = std::max(worst, std::abs(p - 1.0 / strategy.size()));
  return worst;
}

}  // namespace

TEST_CASE("regret matching follows positive regrets") {
  Strategy table_row = regret_match({-0.598, 2.128, -1.356}, kAllLegal);
  CHECK(table_row[0] == 0.0);
  CHECK(table_row[1] == 1.0);
  CHECK(table_row[2] == 0.0);

  Strategy uniform = regret_match({-1, -1, -1}, kAllLegal);
  CHECK(uniform[0] == doctest::Approx(1.0 / 3));
  CHECK(uniform[1] == doctest::Approx(1.0 / 3));
  CHECK(uniform[2] == doctest::Approx(1.0 / 3));

  Strategy split = regret_match({2, 2, 0}, kAllLegal);
  CHECK(split[0] == doctest::Approx(0.5));
  CHECK(split[1] == doctest::Approx(0.5));
  CHECK(split[2] == 0.0);

  Strategy masked = regret_match({5, 100, 1}, {true, false, true});
  CHECK(masked[0] == doctest::Approx(5.0 / 6));
  CHECK(masked[1] == 0.0);
  CHECK(masked[2] == doctest::Approx(1.0 / 6));

  CHECK_THROWS_AS(regret_match({1, 1, 1}, {false, false, false}), std::invalid_argument);
}

TEST_CASE("average strategy normalizes accumulated sums") {
  CFRNode node;
  node.legal_mask = kAllLegal;
  node.strategy_sum = {1.359, 1.975, 0.667};
  Strategy avg = average_strategy(node);
  CHECK(avg[0] == doctest::Approx(0.3397).epsilon(1e-3));
  CHECK(avg[1] == doctest::Approx(0.4936).epsilon(1e-3));
  CHECK(avg[2] == doctest::Approx(0.1667).epsilon(1e-3));

  node.strategy_sum = {0, 0, 0};
  avg = average_strategy(node);
  CHECK(avg[0] == doctest::Approx(1.0 / 3));

  node.strategy_sum = {5, 0, 0};
  avg = average_strategy(node);
  CHECK(avg[0] == 1.0);
  CHECK(avg[1] == 0.0);

  node.legal_mask = {true, true, false};
  node.strategy_sum = {1, 3, 0};
  avg = average_strategy(node);
  CHECK(avg[0] == doctest::Approx(0.25));
  CHECK(avg[1] == doctest::Approx(0.75));
  CHECK(avg[2] == 0.0);
}

TEST_CASE("normal-form regret matching reaches known equilibria") {
  auto [row, col] = rm_normal_form(rps(), 100000, 7);
  CHECK(linf_from_uniform(row) < 0.02);
  CHECK(linf_from_uniform(col) < 0.02);

  MatrixGame pennies{{{1, -1}, {-1, 1}}};
  auto [prow, pcol] = rm_normal_form(pennies, 100000, 7);
  CHECK(linf_from_uniform(prow) < 0.02);
  CHECK(linf_from_uniform(pcol) < 0.02);

  // Row 0 dominates row 1 by a full point everywhere, so its regret can
  // only grow while row 1's shrinks; the average keeps at most the early
  // exploration mass on the dominated row.
  MatrixGame dominant{{{2, 1}, {1, 0}}};
  auto [drow, dcol] = rm_normal_form(dominant, 100000, 7);
  CHECK(drow[0] >= 0.99);
  (void)dcol;
}

TEST_CASE("normal-form solver rejects malformed input") {
  CHECK_THROWS_AS(rm_normal_form(MatrixGame{}, 10), std::invalid_argument);
  CHECK_THROWS_AS(rm_normal_form(MatrixGame{{{}}}, 10), std::invalid_argument);
  CHECK_THROWS_AS(rm_normal_form(MatrixGame{{{1, 2}, {1}}}, 10), std::invalid_argument);
  CHECK_THROWS_AS(rm_normal_form(rps(), 0), std::invalid_argument);
}

TEST_CASE("normal-form solver is reproducible per seed") {
  auto a = rm_normal_form(rps(), 5000, 11);
  auto b = rm_normal_form(rps(), 5000, 11);
  CHECK(a == b);
  auto c = rm_normal_form(rps(), 5000, 12);
  CHECK(a != c);
}

TEST_CASE("cfr iterations are zero-sum and keep node invariants") {
  NodeStore store;
  SplitMix64 rng{99};
  for (int i = 0; i < 60; ++i) {
    auto [u0, u1] = cfr_iteration(shuffle_deal(rng.next()), store);
    CHECK(u0 + u1 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(u0) <= 2.0);
  }
  CHECK(store.size() > 0);
  for (const auto& [key, node] : store) {
    CHECK(node.key == key);
    CHECK(node.legal_mask[0]);  // Normal is never illegal
    CHECK(node.legal_mask[0] + node.legal_mask[1] + node.legal_mask[2] >= 2);
    CHECK(node.visits >= 1);
    double strategy_total = 0;
    for (int a = 0; a < 3; ++a) {
      if (node.legal_mask[a]) {
        CHECK(node.strategy_sum[a] >= 0.0);
        strategy_total += node.strategy_sum[a];
      } else {
        CHECK(node.regret_sum[a] == 0.0);
        CHECK(node.strategy_sum[a] == 0.0);
      }
    }
    CHECK(strategy_total <= static_cast<double>(node.visits) + 1e-9);
  }
}

TEST_CASE("no decision schedule means a plain playout") {
  NodeStore store;
  CFRConfig config;
  config.decision_turns.clear();
  Deal deal = shuffle_deal(4242);
  auto [u0, u1] = cfr_iteration(deal, store, config);
  CHECK(store.empty());

  PlayerCallbacks normal = fixed_pattern_agent(AbstractAction::Normal);
  PlayoutResult plain = playout(new_game(deal), normal, normal);
  CHECK(u0 == doctest::Approx(plain.utility.first));
  CHECK(u1 == doctest::Approx(plain.utility.second));
}

TEST_CASE("training twice from the same seed stream is identical") {
  auto run = [] {
    NodeStore store;
    SplitMix64 rng{2024};
    for (int i = 0; i < 120; ++i) cfr_iteration(shuffle_deal(rng.next()), store);
    return store;
  };
  CHECK(run() == run());
}

TEST_CASE("fixed-deal training converges to the enumerated game value") {
  // Deal 557's abstract tree: 2 decision points, 4 leaves, every key
  // reached once, so backward induction gives the exact minimax value.
  Deal deal = shuffle_deal(557);
  oracle::AbstractTree tree{kDefaultDecisionTurns};
  auto value = tree.minimax(new_game(deal), {AbstractAction::Normal, AbstractAction::Normal});
  REQUIRE_FALSE(tree.key_reuse);
  REQUIRE(tree.leaves <= 729);
  CHECK(value.first == doctest::Approx(2.0));

  NodeStore store;
  for (int i = 0; i < 2000; ++i) cfr_iteration(deal, store);
  auto reached = oracle::average_profile_value(
      new_game(deal), {AbstractAction::Normal, AbstractAction::Normal}, store,
      kDefaultDecisionTurns);
  CHECK(reached.first == doctest::Approx(value.first).epsilon(0.02));
  CHECK(reached.first + reached.second == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("regrets steer toward a pattern that dominates on the deal") {
  // Deal 1338: enumeration puts the root values at [-1, -1, 2], so QiDui
  // beats both alternatives by 3 points whatever the opponent selects.
  Deal deal = shuffle_deal(1338);
  GameState after_draw = apply(new_game(deal), {ActionType::Pass, -1});
  REQUIRE(is_decision_point(after_draw, 0));
  oracle::AbstractTree tree{kDefaultDecisionTurns};
  double v[3];
  for (int a = 0; a < 3; ++a) {
    auto pattern = static_cast<AbstractAction>(a);
    GameState next = apply(after_draw, choose_action(after_draw, 0, pattern));
    v[a] = tree.minimax(next, {pattern, AbstractAction::Normal}).first;
  }
  REQUIRE_FALSE(tree.key_reuse);
  REQUIRE(v[2] > v[0] + 1.0);
  REQUIRE(v[2] > v[1] + 1.0);

  NodeStore store;
  for (int i = 0; i < 100; ++i) cfr_iteration(deal, store);
  InfoSetKey root_key = encode(extract_features(after_draw, 0));
  const CFRNode& root = store.at(root_key);
  CHECK(root.regret_sum[2] > root.regret_sum[0]);
  CHECK(root.regret_sum[2] > root.regret_sum[1]);
  Strategy avg = average_strategy(root);
  CHECK(avg[2] > 0.9);
}
