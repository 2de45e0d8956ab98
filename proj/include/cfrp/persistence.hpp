#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cfrp/cfr.hpp"

namespace cfrp {

// File-level failure: unreadable path, bad header, malformed line. Messages
// carry the path and, for parse errors, the 1-based line number.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Store format: header `cfrp-store v1 actions=normal,pongpong,qidui`, then
// one node per line `key,mask,visits,r0,r1,r2,s0,s1,s2` in increasing key
// order. Reals use shortest round-trip decimals, so save/load is exact and
// equal stores serialize to identical bytes.
void save_store(const NodeStore& store, const std::string& path);
NodeStore load_store(const std::string& path);

// Log text: one event per line, `SEED <u64>` first when present. The same
// grammar backs files, replay, and tests.
std::string log_to_text(const GameLog& log);
GameLog log_from_text(const std::string& text, const std::string& origin = "log");
void write_log(const GameLog& log, const std::string& path);
GameLog read_log(const std::string& path);

// Benchmark format: header `cfrp-bench v1 count=<n> seed=<s>`, then one
// deal per line as 64 kind indices.
struct BenchmarkFile {
  uint64_t seed = 0;
  std::vector<Deal> deals;
};
BenchmarkFile generate_benchmark(int64_t count, uint64_t seed);
void write_benchmark(const BenchmarkFile& bench, const std::string& path);
BenchmarkFile read_benchmark(const std::string& path);

// Training report CSV: `epoch,iterations_total,nodes,exploitability` header
// plus one row per epoch.
std::string reports_to_csv(const std::vector<EpochReport>& reports);

// Atomic write (temp file + rename), shared by every writer above.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace cfrp
