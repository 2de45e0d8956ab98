#include "cfrp/bigint.hpp"

#include <stdexcept>

namespace cfrp {

namespace {
constexpr uint32_t kBase = 1000000000u;
}

BigUint::BigUint(uint64_t v) {
  limbs_.clear();
  do {
    limbs_.push_back(static_cast<uint32_t>(v % kBase));
    v /= kBase;
  } while (v != 0);
}

void BigUint::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::mul(uint32_t m) {
  uint64_t carry = 0;
  for (auto& limb : limbs_) {
    uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
    limb = static_cast<uint32_t>(cur % kBase);
    carry = cur / kBase;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<uint32_t>(carry % kBase));
    carry /= kBase;
  }
  trim();
  return *this;
}

BigUint& BigUint::div_exact(uint32_t d) {
  if (d == 0) throw std::invalid_argument("BigUint::div_exact: division by zero");
  uint64_t rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    uint64_t cur = rem * kBase + limbs_[i];
    limbs_[i] = static_cast<uint32_t>(cur / d);
    rem = cur % d;
  }
  if (rem != 0) throw std::invalid_argument("BigUint::div_exact: nonzero remainder");
  trim();
  return *this;
}

BigUint BigUint::factorial(unsigned n) {
  BigUint r(1);
  for (unsigned i = 2; i <= n; ++i) r.mul(i);
  return r;
}

BigUint BigUint::pow(uint32_t base, unsigned exp) {
  BigUint r(1);
  for (unsigned i = 0; i < exp; ++i) r.mul(base);
  return r;
}

bool BigUint::fits_u64() const {
  BigUint probe(UINT64_MAX);
  if (limbs_.size() != probe.limbs_.size()) return limbs_.size() < probe.limbs_.size();
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != probe.limbs_[i]) return limbs_[i] < probe.limbs_[i];
  }
  return true;
}

uint64_t BigUint::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigUint::to_u64: value exceeds 64 bits");
  uint64_t v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return v;
}

std::string BigUint::to_string() const {
  std::string s = std::to_string(limbs_.back());
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

}  // namespace cfrp
