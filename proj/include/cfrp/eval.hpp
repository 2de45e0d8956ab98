#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cfrp/abstraction.hpp"
#include "cfrp/cfr.hpp"
#include "cfrp/engine.hpp"

namespace cfrp {

enum class EvalMode { Argmax, Sample };

// Plays choose_action under a pattern binding that is revisited at each
// decision point. With a stored node the binding comes from the average
// strategy (argmax with lowest-index ties, or a sample in Sample mode);
// unknown keys and single-choice points rebind to Normal. The store pointer
// is borrowed: keep the store alive for the agent's lifetime.
struct EvalAgent {
  const NodeStore* store = nullptr;
  EvalMode mode = EvalMode::Argmax;
  uint64_t sample_seed = 1;
  std::vector<int> decision_turns{kDefaultDecisionTurns.begin(),
                                  kDefaultDecisionTurns.end()};
};

// Fresh callbacks with private binding state; build one per game. The
// policy_note callback reports the binding at each decision point, so
// playout logs carry POLICY events for this agent.
PlayerCallbacks eval_agent_callbacks(const EvalAgent& agent);

// Utility collected by a fixed `pattern` opponent against the agent seated
// at `seat`, over one deterministic game of `deal`.
int opponent_score(const Deal& deal, const EvalAgent& agent, int seat,
                   AbstractAction pattern);

// Best score any of the three fixed-pattern opponents extracts from the
// agent on this deal and seat.
double best_response_score(const Deal& deal, const EvalAgent& agent, int seat);

struct EvalConfig {
  EvalMode mode = EvalMode::Argmax;
  uint64_t sample_seed = 1;
  std::vector<int> decision_turns{kDefaultDecisionTurns.begin(),
                                  kDefaultDecisionTurns.end()};
  int workers = 1;
};

struct EvalReport {
  int deals = 0;
  // Mean over deals and both seat assignments of the best opponent score:
  // an optimistic estimate against the fixed heuristic set, not the true
  // game value.
  double exploitability = 0;
  std::array<double, 3> per_opponent_scores{};  // mean score per pattern
  std::array<double, 2> seat_breakdown{};       // mean best score per agent seat

  bool operator==(const EvalReport& other) const = default;
};

// Plays every (deal, seat, opponent) combination and aggregates. Games are
// independent, so `workers` only changes wall time, never the report.
EvalReport evaluate(const NodeStore& store, const std::vector<Deal>& benchmark,
                    const EvalConfig& config = {});

}  // namespace cfrp
