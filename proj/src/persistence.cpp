#include "cfrp/persistence.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

namespace cfrp {
namespace {

constexpr const char* kStoreHeader = "cfrp-store v1 actions=normal,pongpong,qidui";

}  // namespace

void write_text_file(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FileError("cannot open " + tmp + " for writing");
    out << content;
    out.flush();
    if (!out) throw FileError("write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw FileError("cannot move " + tmp + " into place: " + ec.message());
  }
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw FileError("read failed for " + path);
  return buf.str();
}

void append_double(std::string& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

[[noreturn]] void bad_line(const std::string& origin, size_t line_no, const std::string& why) {
  throw FileError(origin + ":" + std::to_string(line_no) + ": " + why);
}

// Splits on single spaces; formats are rigid enough that this is exact.
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(std::move(t));
  return toks;
}

template <typename T>
T parse_number(const std::string& tok, const std::string& origin, size_t line_no) {
  T value{};
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    bad_line(origin, line_no, "bad number '" + tok + "'");
  return value;
}

double parse_real(const std::string& tok, const std::string& origin, size_t line_no) {
  double value{};
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    bad_line(origin, line_no, "bad real '" + tok + "'");
  return value;
}

int parse_player(const std::string& tok, const std::string& origin, size_t line_no) {
  int p = parse_number<int>(tok, origin, line_no);
  if (p != 0 && p != 1) bad_line(origin, line_no, "bad player '" + tok + "'");
  return p;
}

TileKind parse_kind(const std::string& tok, const std::string& origin, size_t line_no) {
  int k = parse_number<int>(tok, origin, line_no);
  if (!is_valid_kind(k)) bad_line(origin, line_no, "bad kind '" + tok + "'");
  return k;
}

std::vector<std::string> non_empty_lines(const std::string& text, const std::string& origin,
                                         std::vector<size_t>* line_numbers) {
  std::vector<std::string> lines;
  size_t line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) bad_line(origin, line_no, "empty line");
    lines.push_back(line);
    if (line_numbers) line_numbers->push_back(line_no);
  }
  return lines;
}

}  // namespace

void save_store(const NodeStore& store, const std::string& path) {
  std::string out = kStoreHeader;
  out += '\n';
  for (const auto& [key, node] : store) {
    out += std::to_string(key);
    out += ',';
    for (int a = 0; a < 3; ++a) out += node.legal_mask[a] ? '1' : '0';
    out += ',';
    out += std::to_string(node.visits);
    for (double r : node.regret_sum) {
      out += ',';
      append_double(out, r);
    }
    for (double s : node.strategy_sum) {
      out += ',';
      append_double(out, s);
    }
    out += '\n';
  }
  write_text_file(path, out);
}

NodeStore load_store(const std::string& path) {
  std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  if (!std::getline(in, line) || line != kStoreHeader)
    throw FileError(path + ":1: bad or missing header (want '" + std::string(kStoreHeader) +
                    "')");
  ++line_no;

  NodeStore store;
  InfoSetKey last_key = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> fields;
    size_t pos = 0;
    while (true) {
      size_t comma = line.find(',', pos);
      fields.push_back(line.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (fields.size() != 9) bad_line(path, line_no, "expected 9 comma-separated fields");

    CFRNode node;
    uint64_t raw_key = parse_number<uint64_t>(fields[0], path, line_no);
    if (raw_key >> 20) bad_line(path, line_no, "key '" + fields[0] + "' exceeds 20 bits");
    node.key = static_cast<InfoSetKey>(raw_key);
    if (store.count(node.key))
      bad_line(path, line_no, "duplicate key " + std::to_string(node.key));
    if (!first && node.key <= last_key)
      bad_line(path, line_no, "keys not increasing at " + std::to_string(node.key));

    if (fields[1].size() != 3 || fields[1].find_first_not_of("01") != std::string::npos)
      bad_line(path, line_no, "bad mask '" + fields[1] + "'");
    for (int a = 0; a < 3; ++a) node.legal_mask[a] = fields[1][a] == '1';
    if (!node.legal_mask[0] && !node.legal_mask[1] && !node.legal_mask[2])
      bad_line(path, line_no, "mask has no legal action");

    node.visits = parse_number<int64_t>(fields[2], path, line_no);
    if (node.visits < 1) bad_line(path, line_no, "visits must be >= 1");
    for (int a = 0; a < 3; ++a) {
      node.regret_sum[a] = parse_real(fields[3 + a], path, line_no);
      node.strategy_sum[a] = parse_real(fields[6 + a], path, line_no);
      if (!node.legal_mask[a] && (node.regret_sum[a] != 0 || node.strategy_sum[a] != 0))
        bad_line(path, line_no, "nonzero sums on illegal action " + std::to_string(a));
      if (node.legal_mask[a] && node.strategy_sum[a] < 0)
        bad_line(path, line_no, "negative strategy sum on action " + std::to_string(a));
    }
    store.emplace(node.key, node);
    last_key = node.key;
    first = false;
  }
  return store;
}

std::string log_to_text(const GameLog& log) {
  std::string out;
  if (log.seed) out += "SEED " + std::to_string(*log.seed) + '\n';
  for (const LogEvent& event : log.events) {
    std::visit(
        [&](const auto& ev) {
          using T = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<T, HandEv>) {
            out += "HAND " + std::to_string(ev.player);
            for (TileKind k : ev.kinds) out += ' ' + std::to_string(k);
          } else if constexpr (std::is_same_v<T, DrawEv>) {
            out += "DRAW " + std::to_string(ev.player) + ' ' + std::to_string(ev.kind) +
                   (ev.from_back ? " back" : " front");
          } else if constexpr (std::is_same_v<T, DiscardEv>) {
            out += "DISCARD " + std::to_string(ev.player) + ' ' + std::to_string(ev.kind);
          } else if constexpr (std::is_same_v<T, ChowEv>) {
            out += "CHOW " + std::to_string(ev.player) + ' ' + std::to_string(ev.base);
          } else if constexpr (std::is_same_v<T, PongEv>) {
            out += "PONG " + std::to_string(ev.player) + ' ' + std::to_string(ev.kind);
          } else if constexpr (std::is_same_v<T, KongEv>) {
            out += "KONG " + std::to_string(ev.player) + ' ' + std::to_string(ev.kind) +
                   (ev.concealed ? " concealed" : " exposed");
          } else if constexpr (std::is_same_v<T, PassEv>) {
            out += "PASS " + std::to_string(ev.player) + ' ' + std::to_string(ev.phase);
          } else if constexpr (std::is_same_v<T, PolicyEv>) {
            out += "POLICY " + std::to_string(ev.player) + ' ' + std::to_string(ev.round) +
                   ' ' + abstract_action_token(ev.action);
          } else if constexpr (std::is_same_v<T, EndEv>) {
            if (ev.winner)
              out += "END win " + std::to_string(*ev.winner) + ' ' +
                     win_pattern_token(ev.pattern) + ' ' + std::to_string(ev.points);
            else
              out += "END drawn";
          }
        },
        event);
    out += '\n';
  }
  return out;
}

GameLog log_from_text(const std::string& text, const std::string& origin) {
  GameLog log;
  std::vector<size_t> line_numbers;
  std::vector<std::string> lines = non_empty_lines(text, origin, &line_numbers);
  for (size_t i = 0; i < lines.size(); ++i) {
    size_t line_no = line_numbers[i];
    std::vector<std::string> toks = tokens_of(lines[i]);
    if (toks.empty()) bad_line(origin, line_no, "empty line");
    const std::string& tag = toks[0];
    auto want = [&](size_t n) {
      if (toks.size() != n)
        bad_line(origin, line_no, tag + " expects " + std::to_string(n - 1) + " fields");
    };
    if (tag == "SEED") {
      want(2);
      if (i != 0) bad_line(origin, line_no, "SEED allowed only on the first line");
      log.seed = parse_number<uint64_t>(toks[1], origin, line_no);
    } else if (tag == "HAND") {
      want(2 + kHandTiles);
      HandEv ev{parse_player(toks[1], origin, line_no), {}};
      for (int k = 0; k < kHandTiles; ++k)
        ev.kinds.push_back(parse_kind(toks[2 + k], origin, line_no));
      log.events.emplace_back(std::move(ev));
    } else if (tag == "DRAW") {
      want(4);
      if (toks[3] != "front" && toks[3] != "back")
        bad_line(origin, line_no, "bad source '" + toks[3] + "'");
      log.events.emplace_back(DrawEv{parse_player(toks[1], origin, line_no),
                                     parse_kind(toks[2], origin, line_no), toks[3] == "back"});
    } else if (tag == "DISCARD") {
      want(3);
      log.events.emplace_back(DiscardEv{parse_player(toks[1], origin, line_no),
                                        parse_kind(toks[2], origin, line_no)});
    } else if (tag == "CHOW") {
      want(3);
      TileKind base = parse_kind(toks[2], origin, line_no);
      if (base > 6) bad_line(origin, line_no, "bad chow base '" + toks[2] + "'");
      log.events.emplace_back(ChowEv{parse_player(toks[1], origin, line_no), base});
    } else if (tag == "PONG") {
      want(3);
      log.events.emplace_back(PongEv{parse_player(toks[1], origin, line_no),
                                     parse_kind(toks[2], origin, line_no)});
    } else if (tag == "KONG") {
      want(4);
      if (toks[3] != "concealed" && toks[3] != "exposed")
        bad_line(origin, line_no, "bad kong variant '" + toks[3] + "'");
      log.events.emplace_back(KongEv{parse_player(toks[1], origin, line_no),
                                     parse_kind(toks[2], origin, line_no),
                                     toks[3] == "concealed"});
    } else if (tag == "PASS") {
      want(3);
      int phase = parse_number<int>(toks[2], origin, line_no);
      if (phase != 0 && phase != 1) bad_line(origin, line_no, "bad phase '" + toks[2] + "'");
      log.events.emplace_back(PassEv{parse_player(toks[1], origin, line_no), phase});
    } else if (tag == "POLICY") {
      want(4);
      int player = parse_player(toks[1], origin, line_no);
      int round = parse_number<int>(toks[2], origin, line_no);
      if (round < 0 || round > kWallTiles)
        bad_line(origin, line_no, "bad round '" + toks[2] + "'");
      std::optional<AbstractAction> action = abstract_action_from_token(toks[3]);
      if (!action) bad_line(origin, line_no, "bad policy token '" + toks[3] + "'");
      log.events.emplace_back(PolicyEv{player, round, *action});
    } else if (tag == "END") {
      if (toks.size() == 2 && toks[1] == "drawn") {
        log.events.emplace_back(EndEv{std::nullopt, WinPattern::None, 0});
      } else {
        want(5);
        if (toks[1] != "win") bad_line(origin, line_no, "bad END form '" + toks[1] + "'");
        EndEv ev;
        ev.winner = parse_player(toks[2], origin, line_no);
        if (toks[3] == "normal")
          ev.pattern = WinPattern::Normal;
        else if (toks[3] == "pongpong")
          ev.pattern = WinPattern::PongPongHu;
        else if (toks[3] == "qidui")
          ev.pattern = WinPattern::QiDui;
        else
          bad_line(origin, line_no, "bad pattern '" + toks[3] + "'");
        ev.points = parse_number<int>(toks[4], origin, line_no);
        log.events.emplace_back(ev);
      }
    } else {
      bad_line(origin, line_no, "unknown event tag '" + tag + "'");
    }
  }
  return log;
}

void write_log(const GameLog& log, const std::string& path) {
  write_text_file(path, log_to_text(log));
}

GameLog read_log(const std::string& path) { return log_from_text(read_file(path), path); }

BenchmarkFile generate_benchmark(int64_t count, uint64_t seed) {
  if (count < 0) throw std::invalid_argument("generate_benchmark: negative count");
  BenchmarkFile bench;
  bench.seed = seed;
  bench.deals.reserve(static_cast<size_t>(count));
  SplitMix64 rng{seed};
  for (int64_t i = 0; i < count; ++i) bench.deals.push_back(shuffle_deal(rng.next()));
  return bench;
}

void write_benchmark(const BenchmarkFile& bench, const std::string& path) {
  std::string out = "cfrp-bench v1 count=" + std::to_string(bench.deals.size()) +
                    " seed=" + std::to_string(bench.seed) + '\n';
  for (const Deal& deal : bench.deals) {
    out += deal_to_line(deal);
    out += '\n';
  }
  write_text_file(path, out);
}

BenchmarkFile read_benchmark(const std::string& path) {
  std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw FileError(path + ":1: missing header");
  std::vector<std::string> head = tokens_of(line);
  if (head.size() != 4 || head[0] != "cfrp-bench" || head[1] != "v1" ||
      head[2].rfind("count=", 0) != 0 || head[3].rfind("seed=", 0) != 0)
    throw FileError(path + ":1: bad header '" + line + "'");
  BenchmarkFile bench;
  size_t count = parse_number<size_t>(head[2].substr(6), path, 1);
  bench.seed = parse_number<uint64_t>(head[3].substr(5), path, 1);

  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      bench.deals.push_back(deal_from_line(line));
    } catch (const std::invalid_argument& err) {
      bad_line(path, line_no, err.what());
    }
  }
  if (bench.deals.size() != count)
    throw FileError(path + ": header claims " + std::to_string(count) + " deals, found " +
                    std::to_string(bench.deals.size()));
  return bench;
}

std::string reports_to_csv(const std::vector<EpochReport>& reports) {
  std::string out = "epoch,iterations_total,nodes,exploitability\n";
  for (const EpochReport& r : reports) {
    out += std::to_string(r.epoch);
    out += ',';
    out += std::to_string(r.iterations_total);
    out += ',';
    out += std::to_string(r.nodes);
    out += ',';
    append_double(out, r.exploitability);
    out += '\n';
  }
  return out;
}

}  // namespace cfrp
