#include "cfrp/tiles.hpp"

#include <sstream>
#include <stdexcept>

namespace cfrp {

const char* kind_name(TileKind k) {
  static const char* names[kNumKinds] = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9",
                                         "E",  "S",  "W",  "N",  "Rd", "Gr", "Wh"};
  if (!is_valid_kind(k)) throw std::invalid_argument("kind_name: bad kind " + std::to_string(k));
  return names[k];
}

int Hand::total() const {
  int t = 0;
  for (int8_t c : counts) t += c;
  return t;
}

void Hand::add(TileKind k) {
  if (!is_valid_kind(k)) throw std::invalid_argument("Hand::add: bad kind " + std::to_string(k));
  if (counts[k] >= kCopiesPerKind)
    throw std::invalid_argument(std::string("Hand::add: fifth copy of ") + kind_name(k));
  ++counts[k];
}

void Hand::remove(TileKind k) {
  if (!is_valid_kind(k)) throw std::invalid_argument("Hand::remove: bad kind " + std::to_string(k));
  if (counts[k] <= 0)
    throw std::invalid_argument(std::string("Hand::remove: no copy of ") + kind_name(k));
  --counts[k];
}

TileKind Wall::peek_front() const {
  if (empty()) throw std::logic_error("Wall::peek_front: wall is empty");
  return tiles[head];
}

TileKind Wall::draw_front() {
  if (empty()) throw std::logic_error("Wall::draw_front: wall is empty");
  return tiles[head++];
}

TileKind Wall::draw_back() {
  if (empty()) throw std::logic_error("Wall::draw_back: wall is empty");
  return tiles[--tail];
}

uint64_t SplitMix64::next() {
  uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::next_below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::next_below: zero bound");
  return next() % bound;
}

double SplitMix64::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Deal shuffle_deal(uint64_t seed) {
  Deal deal;
  deal.seed = seed;
  for (int i = 0; i < kNumTiles; ++i) deal.tiles[i] = static_cast<int8_t>(i / kCopiesPerKind);
  SplitMix64 rng(seed);
  for (int i = kNumTiles - 1; i >= 1; --i) {
    int j = static_cast<int>(rng.next_below(static_cast<uint64_t>(i) + 1));
    std::swap(deal.tiles[i], deal.tiles[j]);
  }
  return deal;
}

namespace {

void validate_deal(const Deal& deal) {
  std::array<int, kNumKinds> histogram{};
  for (int8_t t : deal.tiles) {
    if (!is_valid_kind(t)) throw std::invalid_argument("deal: bad kind index " + std::to_string(t));
    ++histogram[t];
  }
  for (int k = 0; k < kNumKinds; ++k) {
    if (histogram[k] != kCopiesPerKind)
      throw std::invalid_argument(std::string("deal: kind ") + kind_name(k) + " appears " +
                                  std::to_string(histogram[k]) + " times, expected 4");
  }
}

}  // namespace

InitialDeal deal_initial(const Deal& deal) {
  validate_deal(deal);
  InitialDeal setup;
  int pos = 0;
  for (int p = 0; p < 2; ++p)
    for (int i = 0; i < kHandTiles; ++i) setup.hands[p].add(deal.tiles[pos++]);
  for (int i = 0; i < kWallTiles; ++i) setup.wall.tiles[i] = deal.tiles[pos++];
  setup.wall.head = 0;
  setup.wall.tail = kWallTiles;
  return setup;
}

std::string deal_to_line(const Deal& deal) {
  std::string line;
  for (int i = 0; i < kNumTiles; ++i) {
    if (i > 0) line += ' ';
    line += std::to_string(deal.tiles[i]);
  }
  return line;
}

Deal deal_from_line(const std::string& line) {
  Deal deal;
  std::istringstream in(line);
  for (int i = 0; i < kNumTiles; ++i) {
    int v;
    if (!(in >> v)) throw std::invalid_argument("deal line: expected 64 kind indices");
    if (v < 0 || v >= kNumKinds)
      throw std::invalid_argument("deal line: bad kind index " + std::to_string(v));
    deal.tiles[i] = static_cast<int8_t>(v);
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("deal line: trailing content '" + extra + "'");
  validate_deal(deal);
  return deal;
}

ComplexityBounds complexity_bounds() {
  ComplexityBounds b;
  b.deal_count = BigUint::factorial(kNumTiles);
  for (int i = 0; i < kNumKinds; ++i) b.deal_count.div_exact(24);
  b.tree_leaves_lb = BigUint::pow(14, kWallTiles);
  b.abstract_leaves = BigUint::pow(3, kWallTiles);
  return b;
}

}  // namespace cfrp
