#include "cfrp/patterns.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace cfrp {

const char* abstract_action_token(AbstractAction a) {
  switch (a) {
    case AbstractAction::Normal: return "normal";
    case AbstractAction::PongPongHu: return "pongpong";
    case AbstractAction::QiDui: return "qidui";
  }
  throw std::invalid_argument("abstract_action_token: bad action");
}

std::optional<AbstractAction> abstract_action_from_token(const std::string& token) {
  if (token == "normal") return AbstractAction::Normal;
  if (token == "pongpong") return AbstractAction::PongPongHu;
  if (token == "qidui") return AbstractAction::QiDui;
  return std::nullopt;
}

const char* win_pattern_token(WinPattern p) {
  switch (p) {
    case WinPattern::Normal: return "normal";
    case WinPattern::PongPongHu: return "pongpong";
    case WinPattern::QiDui: return "qidui";
    case WinPattern::None: break;
  }
  throw std::invalid_argument("win_pattern_token: no token for None");
}

namespace {

void validate_melds(const std::vector<Meld>& melds) {
  if (melds.size() > 4) throw std::invalid_argument("melds: more than four declared sets");
  for (const Meld& m : melds) {
    if (m.type == MeldType::Chow) {
      if (m.base < 0 || m.base > 6)
        throw std::invalid_argument("melds: Chow base out of range " + std::to_string(m.base));
    } else if (!is_valid_kind(m.base)) {
      throw std::invalid_argument("melds: bad kind " + std::to_string(m.base));
    }
  }
}

bool any_chow(const std::vector<Meld>& melds) {
  return std::any_of(melds.begin(), melds.end(),
                     [](const Meld& m) { return m.type == MeldType::Chow; });
}

// Exhaustive search for the decomposition of the concealed tiles that reuses
// the most tiles toward "sets_needed sets plus one eye". Scoring per block:
// complete set 3, two-tile partial 2, eye pair 2; at the end each leftover
// tile may seed one still-unstarted block (one tile per block, one for a
// missing eye). shanten = (3 * sets_needed + 1) - best score, which matches
// the usual 8 - 2m - p - e formula whenever leftovers are plentiful and stays
// exact when they are not.
struct ReuseSearch {
  std::array<int8_t, kNumKinds> c;
  int sets_needed;
  bool allow_chow;
  int remaining;
  int best = 0;

  void run(int i, int blocks, int score, bool eye) {
    int cap = 3 * (sets_needed - blocks) + (eye ? 0 : 2);
    if (score + cap <= best) return;
    if (i == kNumKinds) {
      int seeds = std::min(remaining, (sets_needed - blocks) + (eye ? 0 : 1));
      best = std::max(best, score + seeds);
      return;
    }
    if (c[i] == 0) {
      run(i + 1, blocks, score, eye);
      return;
    }
    // Leave the rest of kind i as leftovers.
    run(i + 1, blocks, score, eye);
    bool chow_here = allow_chow && is_character(i);
    if (blocks < sets_needed) {
      if (c[i] >= 3) {
        c[i] -= 3;
        remaining -= 3;
        run(i, blocks + 1, score + 3, eye);
        c[i] += 3;
        remaining += 3;
      }
      if (chow_here && i <= 6 && c[i + 1] > 0 && c[i + 2] > 0) {
        --c[i], --c[i + 1], --c[i + 2];
        remaining -= 3;
        run(i, blocks + 1, score + 3, eye);
        ++c[i], ++c[i + 1], ++c[i + 2];
        remaining += 3;
      }
      if (c[i] >= 2) {
        c[i] -= 2;
        remaining -= 2;
        run(i, blocks + 1, score + 2, eye);
        c[i] += 2;
        remaining += 2;
      }
      if (chow_here && i <= 7 && c[i + 1] > 0) {
        --c[i], --c[i + 1];
        remaining -= 2;
        run(i, blocks + 1, score + 2, eye);
        ++c[i], ++c[i + 1];
        remaining += 2;
      }
      if (chow_here && i <= 6 && c[i + 2] > 0) {
        --c[i], --c[i + 2];
        remaining -= 2;
        run(i, blocks + 1, score + 2, eye);
        ++c[i], ++c[i + 2];
        remaining += 2;
      }
    }
    if (!eye && c[i] >= 2) {
      c[i] -= 2;
      remaining -= 2;
      run(i, blocks, score + 2, true);
      c[i] += 2;
      remaining += 2;
    }
  }
};

int best_reuse(const Hand& hand, int sets_needed, bool allow_chow) {
  // Counts fit base 5, so the whole position packs into one integer; hot
  // inner loops (discard scans, regret traversals) revisit positions often
  // enough that memoizing pays for itself.
  uint64_t key = allow_chow;
  for (TileKind k = 0; k < kNumKinds; ++k) key = key * 5 + hand.counts[k];
  key = key * 5 + static_cast<uint64_t>(sets_needed);
  thread_local std::unordered_map<uint64_t, int> cache;
  if (cache.size() >= 2'000'000) cache.clear();
  auto [it, inserted] = cache.try_emplace(key, 0);
  if (!inserted) return it->second;

  ReuseSearch search;
  search.c = hand.counts;
  search.sets_needed = sets_needed;
  search.allow_chow = allow_chow;
  search.remaining = hand.total();
  search.run(0, 0, 0, false);
  it->second = search.best;
  return search.best;
}

// Can the concealed counts be fully decomposed into sets (pongs, and chows if
// allowed), consuming every tile?
bool sets_cover(std::array<int8_t, kNumKinds>& c, int i, bool allow_chow) {
  while (i < kNumKinds && c[i] == 0) ++i;
  if (i == kNumKinds) return true;
  if (c[i] >= 3) {
    c[i] -= 3;
    bool ok = sets_cover(c, i, allow_chow);
    c[i] += 3;
    if (ok) return true;
  }
  if (allow_chow && i <= 6 && c[i + 1] > 0 && c[i + 2] > 0) {
    --c[i], --c[i + 1], --c[i + 2];
    bool ok = sets_cover(c, i, allow_chow);
    ++c[i], ++c[i + 1], ++c[i + 2];
    if (ok) return true;
  }
  return false;
}

bool wins_with_sets(const Hand& hand, bool allow_chow) {
  std::array<int8_t, kNumKinds> c = hand.counts;
  for (int eye = 0; eye < kNumKinds; ++eye) {
    if (c[eye] < 2) continue;
    c[eye] -= 2;
    bool ok = sets_cover(c, 0, allow_chow);
    c[eye] += 2;
    if (ok) return true;
  }
  return false;
}

void check_tile_equivalence(const Hand& hand, const std::vector<Meld>& melds, bool allow_thirteen,
                            const char* who) {
  int total = hand.total();
  int m = static_cast<int>(melds.size());
  bool fourteen = total == 14 - 3 * m;
  bool thirteen = total == 13 - 3 * m;
  if (fourteen) return;
  if (allow_thirteen && thirteen) return;
  throw std::invalid_argument(std::string(who) + ": " + std::to_string(total) +
                              " concealed tiles with " + std::to_string(m) +
                              " melds is not a valid hand size");
}

}  // namespace

WinResult evaluate_win(const Hand& hand, const std::vector<Meld>& melds) {
  validate_melds(melds);
  check_tile_equivalence(hand, melds, false, "evaluate_win");

  if (melds.empty()) {
    bool all_even = true;
    for (int8_t c : hand.counts)
      if (c % 2 != 0) all_even = false;
    if (all_even) return {WinPattern::QiDui, 2};
  }

  if (!any_chow(melds)) {
    // Concealed part must be pongs plus exactly one pair: every count 0 or 3
    // except a single 2. Counts of 1 or 4 leave a stray tile.
    int pairs = 0;
    bool shape_ok = true;
    for (int8_t c : hand.counts) {
      if (c == 2) ++pairs;
      else if (c != 0 && c != 3) shape_ok = false;
    }
    if (shape_ok && pairs == 1) return {WinPattern::PongPongHu, 2};
  }

  if (wins_with_sets(hand, true)) return {WinPattern::Normal, 1};
  return {WinPattern::None, 0};
}

int shanten(const Hand& hand, const std::vector<Meld>& melds, AbstractAction pattern) {
  validate_melds(melds);
  check_tile_equivalence(hand, melds, true, "shanten");
  int sets_needed = 4 - static_cast<int>(melds.size());

  switch (pattern) {
    case AbstractAction::QiDui: {
      // QiDui needs all 14 tiles concealed; any declared meld rules it out.
      if (!melds.empty()) return kShantenImpossible;
      int pairs = 0;
      for (int8_t c : hand.counts) pairs += c / 2;
      return 6 - pairs;
    }
    case AbstractAction::PongPongHu: {
      if (any_chow(melds)) return kShantenImpossible;
      return (3 * sets_needed + 1) - best_reuse(hand, sets_needed, false);
    }
    case AbstractAction::Normal:
      return (3 * sets_needed + 1) - best_reuse(hand, sets_needed, true);
  }
  throw std::invalid_argument("shanten: bad pattern");
}

int acceptance_count(const Hand& hand, const std::vector<Meld>& melds, AbstractAction pattern) {
  int current = shanten(hand, melds, pattern);
  if (current <= -1) return 0;
  check_tile_equivalence(hand, melds, true, "acceptance_count");
  if (hand.total() != 13 - 3 * static_cast<int>(melds.size()))
    throw std::invalid_argument("acceptance_count: hand is not 13-tile-equivalent");

  int kinds = 0;
  Hand probe = hand;
  for (TileKind k = 0; k < kNumKinds; ++k) {
    if (probe.counts[k] >= kCopiesPerKind) continue;
    ++probe.counts[k];
    if (shanten(probe, melds, pattern) < current) ++kinds;
    --probe.counts[k];
  }
  return kinds;
}

}  // namespace cfrp
