#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cfrp/abstraction.hpp"
#include "cfrp/policy.hpp"

namespace cfrp {

// Probabilities over [Normal, PongPongHu, QiDui]; zero on illegal entries.
using Strategy = std::array<double, 3>;

struct CFRNode {
  InfoSetKey key = 0;
  std::array<bool, 3> legal_mask{};
  std::array<double, 3> regret_sum{};
  std::array<double, 3> strategy_sum{};
  int64_t visits = 0;

  bool operator==(const CFRNode& other) const = default;
};

using NodeStore = std::map<InfoSetKey, CFRNode>;

// Current strategy: positive regrets normalized, uniform over legal actions
// when no regret is positive.
Strategy regret_match(const std::array<double, 3>& regret_sum,
                      const std::array<bool, 3>& legal_mask);

// Normalized strategy_sum; uniform over legal actions while still empty.
Strategy average_strategy(const CFRNode& node);

// Zero-sum normal-form game, payoff[r][c] for the row player.
struct MatrixGame {
  std::vector<std::vector<double>> payoff;
};

// Simultaneous regret matching with sampled actions and cumulative regrets.
// Returns both players' normalized average strategies.
std::pair<std::vector<double>, std::vector<double>> rm_normal_form(const MatrixGame& game,
                                                                   int64_t iterations,
                                                                   uint64_t seed = 1);

struct CFRConfig {
  std::vector<int> decision_turns{kDefaultDecisionTurns.begin(), kDefaultDecisionTurns.end()};
};

// One chance-sampled traversal on the given deal. Branches over abstract
// actions wherever a player faces a real choice, updates both players'
// regret and strategy sums in the store, and returns root expected
// utilities under the current strategy profile.
std::pair<double, double> cfr_iteration(const Deal& deal, NodeStore& store,
                                        const CFRConfig& config = {});

struct EpochReport {
  int64_t epoch = 0;
  int64_t iterations_total = 0;
  int64_t nodes = 0;
  double exploitability = 0;
};

struct TrainConfig {
  int64_t iterations = 0;
  int64_t epoch_size = 0;  // 0 means a single epoch spanning the whole run
  uint64_t seed = 1;
  std::vector<Deal> benchmark;     // exploitability probe, may be empty
  std::string store_path;          // empty disables checkpoints
  std::string report_path;         // empty disables the CSV report
  std::vector<int> decision_turns{kDefaultDecisionTurns.begin(), kDefaultDecisionTurns.end()};
  int eval_workers = 1;
};

// Runs cfr_iteration over a seeded deal stream, evaluating and
// checkpointing at every epoch boundary. Appends to `store`, so training
// can resume from a loaded checkpoint.
std::vector<EpochReport> train(NodeStore& store, const TrainConfig& config);

}  // namespace cfrp
