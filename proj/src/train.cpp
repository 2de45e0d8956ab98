#include <cmath>
#include <limits>
#include <stdexcept>

#include "cfrp/cfr.hpp"
#include "cfrp/eval.hpp"
#include "cfrp/persistence.hpp"

namespace cfrp {

std::vector<EpochReport> train(NodeStore& store, const TrainConfig& config) {
  if (config.iterations < 0)
    throw std::invalid_argument("train: iterations must be >= 0");
  if (config.epoch_size < 0)
    throw std::invalid_argument("train: epoch_size must be >= 0");
  if (config.eval_workers < 1)
    throw std::invalid_argument("train: eval_workers must be >= 1");
  if (config.iterations == 0) return {};

  int64_t epoch_size = config.epoch_size == 0 ? config.iterations : config.epoch_size;
  SplitMix64 stream(config.seed);
  CFRConfig iteration_config{config.decision_turns};
  EvalConfig eval_config;
  eval_config.decision_turns = config.decision_turns;
  eval_config.workers = config.eval_workers;

  std::vector<EpochReport> reports;
  int64_t done = 0;
  while (done < config.iterations) {
    int64_t batch = std::min(epoch_size, config.iterations - done);
    for (int64_t i = 0; i < batch; ++i)
      cfr_iteration(shuffle_deal(stream.next()), store, iteration_config);
    done += batch;

    EpochReport report;
    report.epoch = static_cast<int64_t>(reports.size()) + 1;
    report.iterations_total = done;
    report.nodes = static_cast<int64_t>(store.size());
    report.exploitability = config.benchmark.empty()
                                ? std::numeric_limits<double>::quiet_NaN()
                                : evaluate(store, config.benchmark, eval_config).exploitability;
    reports.push_back(report);

    try {
      if (!config.store_path.empty()) save_store(store, config.store_path);
      if (!config.report_path.empty())
        write_text_file(config.report_path, reports_to_csv(reports));
    } catch (const FileError& err) {
      throw FileError("epoch " + std::to_string(report.epoch) + ": " + err.what());
    }
  }
  return reports;
}

}  // namespace cfrp
