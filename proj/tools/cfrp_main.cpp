#include <charconv>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cfrp/eval.hpp"
#include "cfrp/persistence.hpp"
#include "cfrp/policy.hpp"

namespace {

using namespace cfrp;

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

AbstractAction pattern_flag(const std::string& token) {
  std::optional<AbstractAction> a = abstract_action_from_token(token);
  if (!a)
    throw std::invalid_argument("unknown pattern '" + token +
                                "', expected normal|pongpong|qidui");
  return *a;
}

void parse_mode(const std::string& token, EvalConfig& config) {
  if (token == "argmax") {
    config.mode = EvalMode::Argmax;
    return;
  }
  if (token.rfind("sample:", 0) == 0) {
    std::string seed = token.substr(7);
    auto res = std::from_chars(seed.data(), seed.data() + seed.size(), config.sample_seed);
    if (res.ec == std::errc() && res.ptr == seed.data() + seed.size()) {
      config.mode = EvalMode::Sample;
      return;
    }
  }
  throw std::invalid_argument("bad --mode '" + token + "', expected argmax or sample:SEED");
}

std::string hand_text(const Hand& h) {
  std::string out;
  for (TileKind k = 0; k < kNumKinds; ++k)
    for (int i = 0; i < h.count(k); ++i) {
      if (!out.empty()) out += ' ';
      out += kind_name(k);
    }
  return out;
}

// Pure event-sourced renderer: hands are tracked from the log alone, so a
// replay needs no store and no engine state.
int replay_log(const GameLog& log) {
  if (log.seed) std::cout << "seed " << *log.seed << "\n";
  Hand hands[2];
  TileKind last_discard = -1;
  for (size_t i = 0; i < log.events.size(); ++i) {
    const LogEvent& event = log.events[i];
    if (const auto* hand = std::get_if<HandEv>(&event)) {
      for (TileKind k : hand->kinds) hands[hand->player].add(k);
      std::cout << "p" << hand->player << " is dealt: " << hand_text(hands[hand->player])
                << "\n";
    } else if (const auto* draw = std::get_if<DrawEv>(&event)) {
      hands[draw->player].add(draw->kind);
      std::cout << "p" << draw->player << " draws " << kind_name(draw->kind)
                << (draw->from_back ? " from the back" : "") << "  ["
                << hand_text(hands[draw->player]) << "]\n";
    } else if (const auto* discard = std::get_if<DiscardEv>(&event)) {
      hands[discard->player].remove(discard->kind);
      last_discard = discard->kind;
      std::cout << "p" << discard->player << " discards " << kind_name(discard->kind) << "\n";
    } else if (const auto* chow = std::get_if<ChowEv>(&event)) {
      for (TileKind k = chow->base; k < chow->base + 3; ++k)
        if (k != last_discard) hands[chow->player].remove(k);
      std::cout << "p" << chow->player << " chows " << kind_name(chow->base) << "-"
                << kind_name(chow->base + 2) << " seizing " << kind_name(last_discard)
                << "  [" << hand_text(hands[chow->player]) << "]\n";
    } else if (const auto* pong = std::get_if<PongEv>(&event)) {
      hands[pong->player].remove(pong->kind);
      hands[pong->player].remove(pong->kind);
      std::cout << "p" << pong->player << " pongs " << kind_name(pong->kind) << "  ["
                << hand_text(hands[pong->player]) << "]\n";
    } else if (const auto* kong = std::get_if<KongEv>(&event)) {
      for (int i = 0; i < (kong->concealed ? 4 : 3); ++i) hands[kong->player].remove(kong->kind);
      std::cout << "p" << kong->player << (kong->concealed ? " declares a concealed kong of "
                                                           : " kongs the discarded ")
                << kind_name(kong->kind) << "\n";
    } else if (const auto* pass = std::get_if<PassEv>(&event)) {
      // A phase-1 pass normally precedes a discard; only the opening pass is
      // followed by the same player's draw.
      bool opening = pass->phase == 1 && i + 1 < log.events.size() &&
                     std::holds_alternative<DrawEv>(log.events[i + 1]);
      std::cout << "p" << pass->player
                << (pass->phase == 0   ? " passes on the discard\n"
                    : opening          ? " takes the opening draw\n"
                                       : " keeps the draw\n");
    } else if (const auto* policy = std::get_if<PolicyEv>(&event)) {
      std::cout << "p" << policy->player << " picks policy "
                << abstract_action_token(policy->action) << " at round " << policy->round
                << "\n";
    } else if (const auto* end = std::get_if<EndEv>(&event)) {
      if (end->winner) {
        int u = end->points;
        std::cout << "END: p" << *end->winner << " wins with " << win_pattern_token(end->pattern)
                  << ", " << u << (u == 1 ? " point" : " points") << "  utilities "
                  << (*end->winner == 0 ? u : -u) << " / " << (*end->winner == 0 ? -u : u)
                  << "\n";
      } else {
        std::cout << "END: wall exhausted, drawn game  utilities 0 / 0\n";
      }
    }
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Two-player Mahjong CFR trainer over a pattern abstraction"};
  app.require_subcommand(1);

  auto* train_cmd = app.add_subcommand("train", "Run CFR iterations over fresh deals");
  TrainConfig train_config;
  std::string train_benchmark;
  train_cmd->add_option("--iterations", train_config.iterations, "CFR iterations to run")
      ->required()
      ->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--epoch-size", train_config.epoch_size,
                        "Iterations per epoch (0 = one epoch)")
      ->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--seed", train_config.seed, "Deal stream seed");
  train_cmd->add_option("--store", train_config.store_path, "Node store output path");
  train_cmd->add_option("--benchmark", train_benchmark,
                        "Benchmark deals for per-epoch exploitability");
  train_cmd->add_option("--report", train_config.report_path, "Per-epoch CSV output path");
  train_cmd->add_option("--decision-turns", train_config.decision_turns,
                        "Turns that rebind the pattern (default 1,7,13)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  train_cmd->callback([&] {
    if (!train_benchmark.empty())
      train_config.benchmark = read_benchmark(train_benchmark).deals;
    NodeStore store;
    for (const EpochReport& r : train(store, train_config))
      std::cout << "epoch " << r.epoch << "  iterations " << r.iterations_total << "  nodes "
                << r.nodes << "  exploitability " << fmt(r.exploitability) << "\n";
    std::cout << "trained " << train_config.iterations << " iterations, " << store.size()
              << " nodes\n";
  });

  auto* eval_cmd = app.add_subcommand("eval", "Exploitability of a store on a benchmark");
  std::string eval_store, eval_benchmark, eval_mode = "argmax";
  EvalConfig eval_config;
  eval_cmd->add_option("--store", eval_store, "Node store path")->required();
  eval_cmd->add_option("--benchmark", eval_benchmark, "Benchmark path")->required();
  eval_cmd->add_option("--workers", eval_config.workers, "Parallel games")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_option("--mode", eval_mode, "argmax or sample:SEED");
  eval_cmd->callback([&] {
    parse_mode(eval_mode, eval_config);
    NodeStore store = load_store(eval_store);
    BenchmarkFile bench = read_benchmark(eval_benchmark);
    EvalReport report = evaluate(store, bench.deals, eval_config);
    std::cout << "deals " << report.deals << "\n"
              << "exploitability " << fmt(report.exploitability) << "\n";
    for (int a = 0; a < 3; ++a)
      std::cout << "opponent " << abstract_action_token(static_cast<AbstractAction>(a)) << " "
                << fmt(report.per_opponent_scores[a]) << "\n";
    for (int seat = 0; seat < 2; ++seat)
      std::cout << "seat " << seat << " " << fmt(report.seat_breakdown[seat]) << "\n";
  });

  auto* play_cmd = app.add_subcommand("play", "One logged game: stored strategy vs a fixed agent");
  std::string play_store, play_log, play_opponent = "normal";
  uint64_t play_seed = 0;
  play_cmd->add_option("--store", play_store, "Node store path")->required();
  play_cmd->add_option("--seed", play_seed, "Deal seed")->required();
  play_cmd->add_option("--log", play_log, "Log output path")->required();
  play_cmd->add_option("--opponent", play_opponent, "normal|pongpong|qidui");
  play_cmd->callback([&] {
    AbstractAction opponent = pattern_flag(play_opponent);
    NodeStore store = load_store(play_store);
    EvalAgent agent{&store};
    PlayoutResult result = playout(new_game(shuffle_deal(play_seed)),
                                   eval_agent_callbacks(agent), fixed_pattern_agent(opponent));
    result.log.seed = play_seed;
    write_log(result.log, play_log);
    std::cout << "utilities " << result.utility.first << " / " << result.utility.second
              << ", log written to " << play_log << "\n";
  });

  auto* replay_cmd = app.add_subcommand("replay", "Render a game log with all hands revealed");
  std::string replay_path;
  replay_cmd->add_option("--log", replay_path, "Log path")->required();
  replay_cmd->callback([&] { replay_log(read_log(replay_path)); });

  auto* bench_cmd = app.add_subcommand("bench-gen", "Generate a benchmark deal file");
  int64_t bench_deals = 0;
  uint64_t bench_seed = 0;
  std::string bench_out;
  bench_cmd->add_option("--deals", bench_deals, "Number of deals")
      ->required()
      ->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--seed", bench_seed, "Shuffle seed")->required();
  bench_cmd->add_option("--out", bench_out, "Output path")->required();
  bench_cmd->callback([&] {
    write_benchmark(generate_benchmark(bench_deals, bench_seed), bench_out);
    std::cout << "wrote " << bench_deals << " deals to " << bench_out << "\n";
  });

  auto* inspect_cmd = app.add_subcommand("inspect", "Print one node of a store");
  std::string inspect_store;
  InfoSetKey inspect_key = 0;
  inspect_cmd->add_option("--store", inspect_store, "Node store path")->required();
  inspect_cmd->add_option("--key", inspect_key, "Info-set key (decimal)")->required();
  inspect_cmd->callback([&] {
    NodeStore store = load_store(inspect_store);
    auto it = store.find(inspect_key);
    if (it == store.end())
      throw FileError("key " + std::to_string(inspect_key) + " not in " + inspect_store);
    const CFRNode& node = it->second;
    Features f = decode(node.key);
    std::cout << "key=" << node.key << "\n"
              << "round=" << f.round << ", pairs=" << f.pairs << ", pongs=" << f.pongs_kongs
              << ", characters=" << f.character_tiles << ", winds=" << f.wind_tiles << "\n";
    std::cout << "legal";
    for (int a = 0; a < 3; ++a)
      if (node.legal_mask[a])
        std::cout << " " << abstract_action_token(static_cast<AbstractAction>(a));
    std::cout << "\nvisits " << node.visits << "\n";
    Strategy avg = average_strategy(node);
    std::cout << "regret_sum";
    for (double r : node.regret_sum) std::cout << " " << fmt(r);
    std::cout << "\nstrategy_sum";
    for (double s : node.strategy_sum) std::cout << " " << fmt(s);
    std::cout << "\naverage";
    for (double p : avg) std::cout << " " << fmt(p);
    std::cout << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const FileError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 3;
  }
}
