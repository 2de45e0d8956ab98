#include "cfrp/cfr.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace cfrp {
namespace {

int count_legal(const std::array<bool, 3>& mask) { return mask[0] + mask[1] + mask[2]; }

std::vector<double> positive_normalized(const std::vector<double>& regret) {
  double total = 0;
  for (double r : regret) total += std::max(r, 0.0);
  std::vector<double> sigma(regret.size());
  if (total > 0)
    for (size_t i = 0; i < regret.size(); ++i) sigma[i] = std::max(regret[i], 0.0) / total;
  else
    std::fill(sigma.begin(), sigma.end(), 1.0 / static_cast<double>(regret.size()));
  return sigma;
}

size_t sample_index(const std::vector<double>& sigma, SplitMix64& rng) {
  double x = rng.next_double();
  double cum = 0;
  for (size_t i = 0; i < sigma.size(); ++i) {
    cum += sigma[i];
    if (x < cum) return i;
  }
  return sigma.size() - 1;
}

struct Traverser {
  NodeStore& store;
  std::span<const int> decision_turns;

  std::pair<double, double> run(GameState s, std::array<AbstractAction, 2> bound,
                                double pi0, double pi1) {
    while (!s.is_terminal()) {
      int p = s.to_act;
      if (is_decision_point(s, p, decision_turns)) {
        auto mask = legal_abstract_actions(s, p);
        if (count_legal(mask) >= 2) return branch(s, bound, pi0, pi1, mask);
        bound[p] = AbstractAction::Normal;
      }
      s = apply(s, choose_action(s, p, bound[p]));
    }
    auto [u0, u1] = terminal_utility(s);
    return {static_cast<double>(u0), static_cast<double>(u1)};
  }

  std::pair<double, double> branch(const GameState& s, std::array<AbstractAction, 2> bound,
                                   double pi0, double pi1, const std::array<bool, 3>& mask) {
    const int p = s.to_act;
    InfoSetKey key = encode(extract_features(s, p));
    auto [it, inserted] = store.try_emplace(key);
    if (inserted) {
      it->second.key = key;
      it->second.legal_mask = mask;
    }
    // The node's mask is fixed at creation; other states can share the key
    // with a different live mask, and the stored one governs both branching
    // and updates so the node stays internally consistent. A pattern bound
    // beyond its feasibility window merely plays out as a weak heuristic.
    Strategy sigma = regret_match(it->second.regret_sum, it->second.legal_mask);
    std::array<std::pair<double, double>, 3> value{};
    std::pair<double, double> node_value{0, 0};
    for (int a = 0; a < 3; ++a) {
      if (!it->second.legal_mask[a]) continue;
      auto next_bound = bound;
      next_bound[p] = static_cast<AbstractAction>(a);
      GameState next = apply(s, choose_action(s, p, next_bound[p]));
      value[a] = p == 0 ? run(std::move(next), next_bound, pi0 * sigma[a], pi1)
                        : run(std::move(next), next_bound, pi0, pi1 * sigma[a]);
      node_value.first += sigma[a] * value[a].first;
      node_value.second += sigma[a] * value[a].second;
    }
    CFRNode& node = it->second;
    const double pi_self = p == 0 ? pi0 : pi1;
    const double pi_opp = p == 0 ? pi1 : pi0;
    const double v_here = p == 0 ? node_value.first : node_value.second;
    for (int a = 0; a < 3; ++a) {
      if (!node.legal_mask[a]) continue;
      double v_a = p == 0 ? value[a].first : value[a].second;
      node.regret_sum[a] += pi_opp * (v_a - v_here);
      node.strategy_sum[a] += pi_self * sigma[a];
    }
    node.visits += 1;
    return node_value;
  }
};

}  // namespace

Strategy regret_match(const std::array<double, 3>& regret_sum,
                      const std::array<bool, 3>& legal_mask) {
  int n_legal = count_legal(legal_mask);
  if (n_legal == 0) throw std::invalid_argument("regret_match: no legal action");
  Strategy sigma{};
  double total = 0;
  for (int a = 0; a < 3; ++a)
    if (legal_mask[a]) total += std::max(regret_sum[a], 0.0);
  for (int a = 0; a < 3; ++a) {
    if (!legal_mask[a]) continue;
    sigma[a] = total > 0 ? std::max(regret_sum[a], 0.0) / total : 1.0 / n_legal;
  }
  return sigma;
}

Strategy average_strategy(const CFRNode& node) {
  int n_legal = count_legal(node.legal_mask);
  if (n_legal == 0) throw std::invalid_argument("average_strategy: no legal action");
  double total = 0;
  for (int a = 0; a < 3; ++a)
    if (node.legal_mask[a]) total += node.strategy_sum[a];
  Strategy avg{};
  for (int a = 0; a < 3; ++a) {
    if (!node.legal_mask[a]) continue;
    avg[a] = total > 0 ? node.strategy_sum[a] / total : 1.0 / n_legal;
  }
  return avg;
}

std::pair<std::vector<double>, std::vector<double>> rm_normal_form(const MatrixGame& game,
                                                                   int64_t iterations,
                                                                   uint64_t seed) {
  const size_t rows = game.payoff.size();
  if (rows == 0) throw std::invalid_argument("rm_normal_form: empty matrix");
  const size_t cols = game.payoff[0].size();
  if (cols == 0) throw std::invalid_argument("rm_normal_form: empty row");
  for (const auto& row : game.payoff)
    if (row.size() != cols) throw std::invalid_argument("rm_normal_form: ragged matrix");
  if (iterations < 1) throw std::invalid_argument("rm_normal_form: iterations must be >= 1");

  std::vector<double> regret0(rows), regret1(cols), sum0(rows), sum1(cols);
  SplitMix64 rng{seed};
  for (int64_t t = 0; t < iterations; ++t) {
    std::vector<double> sigma0 = positive_normalized(regret0);
    std::vector<double> sigma1 = positive_normalized(regret1);
    for (size_t i = 0; i < rows; ++i) sum0[i] += sigma0[i];
    for (size_t j = 0; j < cols; ++j) sum1[j] += sigma1[j];
    size_t a0 = sample_index(sigma0, rng);
    size_t a1 = sample_index(sigma1, rng);
    for (size_t i = 0; i < rows; ++i) regret0[i] += game.payoff[i][a1] - game.payoff[a0][a1];
    for (size_t j = 0; j < cols; ++j) regret1[j] += game.payoff[a0][a1] - game.payoff[a0][j];
  }
  for (double& v : sum0) v /= static_cast<double>(iterations);
  for (double& v : sum1) v /= static_cast<double>(iterations);
  return {sum0, sum1};
}

std::pair<double, double> cfr_iteration(const Deal& deal, NodeStore& store,
                                        const CFRConfig& config) {
  Traverser traverser{store, config.decision_turns};
  return traverser.run(new_game(deal), {AbstractAction::Normal, AbstractAction::Normal}, 1.0,
                       1.0);
}

}  // namespace cfrp
