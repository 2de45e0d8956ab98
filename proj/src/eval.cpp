#include "cfrp/eval.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <thread>

#include "cfrp/policy.hpp"

namespace cfrp {
namespace {

AbstractAction decide(const EvalAgent& agent, const GameState& state, int player,
                      SplitMix64& rng) {
  std::array<bool, 3> legal = legal_abstract_actions(state, player);
  if (std::count(legal.begin(), legal.end(), true) < 2) return AbstractAction::Normal;
  if (!agent.store) return AbstractAction::Normal;
  auto it = agent.store->find(encode(extract_features(state, player)));
  if (it == agent.store->end()) return AbstractAction::Normal;

  Strategy avg = average_strategy(it->second);
  if (agent.mode == EvalMode::Argmax) {
    int best = 0;
    for (int a = 1; a < 3; ++a)
      if (avg[a] > avg[best]) best = a;
    return static_cast<AbstractAction>(best);
  }
  double roll = rng.next_double();
  double acc = 0;
  for (int a = 0; a < 3; ++a) {
    acc += avg[a];
    if (roll < acc) return static_cast<AbstractAction>(a);
  }
  return AbstractAction::Normal;
}

void require_seat(int seat) {
  if (seat != 0 && seat != 1)
    throw std::invalid_argument("seat must be 0 or 1, got " + std::to_string(seat));
}

}  // namespace

PlayerCallbacks eval_agent_callbacks(const EvalAgent& agent) {
  struct Binding {
    AbstractAction pattern = AbstractAction::Normal;
    int rebound_round = -1;
    SplitMix64 rng;

    explicit Binding(uint64_t seed) : rng(seed) {}
  };
  auto binding = std::make_shared<Binding>(agent.sample_seed);

  // playout may consult policy_note and act on the same state; the round
  // stamp keeps the (possibly sampled) rebind from running twice.
  auto rebind = [agent, binding](const GameState& state) {
    int player = state.to_act;
    if (!is_decision_point(state, player, agent.decision_turns)) return false;
    if (binding->rebound_round != state.round) {
      binding->pattern = decide(agent, state, player, binding->rng);
      binding->rebound_round = state.round;
    }
    return true;
  };

  PlayerCallbacks cb;
  cb.policy_note = [rebind, binding](const GameState& state) -> std::optional<AbstractAction> {
    if (rebind(state)) return binding->pattern;
    return std::nullopt;
  };
  cb.act = [rebind, binding](const GameState& state) {
    rebind(state);
    return choose_action(state, state.to_act, binding->pattern);
  };
  return cb;
}

int opponent_score(const Deal& deal, const EvalAgent& agent, int seat,
                   AbstractAction pattern) {
  require_seat(seat);
  PlayerCallbacks mine = eval_agent_callbacks(agent);
  PlayerCallbacks theirs = fixed_pattern_agent(pattern);
  PlayoutResult result = seat == 0 ? playout(new_game(deal), mine, theirs)
                                   : playout(new_game(deal), theirs, mine);
  return seat == 0 ? result.utility.second : result.utility.first;
}

double best_response_score(const Deal& deal, const EvalAgent& agent, int seat) {
  require_seat(seat);
  int best = opponent_score(deal, agent, seat, AbstractAction::Normal);
  best = std::max(best, opponent_score(deal, agent, seat, AbstractAction::PongPongHu));
  best = std::max(best, opponent_score(deal, agent, seat, AbstractAction::QiDui));
  return best;
}

EvalReport evaluate(const NodeStore& store, const std::vector<Deal>& benchmark,
                    const EvalConfig& config) {
  if (benchmark.empty()) throw std::invalid_argument("evaluate: empty benchmark");
  if (config.workers < 1)
    throw std::invalid_argument("evaluate: workers must be >= 1, got " +
                                std::to_string(config.workers));

  EvalAgent agent{&store, config.mode, config.sample_seed, config.decision_turns};
  int deals = static_cast<int>(benchmark.size());
  int games = deals * 2 * 3;
  std::vector<int> scores(games);

  auto run_slice = [&](int offset, int stride) {
    for (int g = offset; g < games; g += stride) {
      int deal = g / 6;
      int seat = g / 3 % 2;
      auto pattern = static_cast<AbstractAction>(g % 3);
      scores[g] = opponent_score(benchmark[deal], agent, seat, pattern);
    }
  };

  int workers = std::min(config.workers, games);
  if (workers == 1) {
    run_slice(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_slice, w, workers);
    for (std::thread& t : pool) t.join();
  }

  EvalReport report;
  report.deals = deals;
  std::array<double, 3> opponent_total{};
  std::array<double, 2> seat_total{};
  for (int deal = 0; deal < deals; ++deal)
    for (int seat = 0; seat < 2; ++seat) {
      const int* row = &scores[(deal * 2 + seat) * 3];
      for (int a = 0; a < 3; ++a) opponent_total[a] += row[a];
      seat_total[seat] += std::max({row[0], row[1], row[2]});
    }
  for (int a = 0; a < 3; ++a) report.per_opponent_scores[a] = opponent_total[a] / (deals * 2);
  for (int seat = 0; seat < 2; ++seat) report.seat_breakdown[seat] = seat_total[seat] / deals;
  report.exploitability = (seat_total[0] + seat_total[1]) / (deals * 2);
  return report;
}

}  // namespace cfrp
