#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cfrp {

// Minimal arbitrary-precision unsigned integer, base 1e9 limbs, little-endian.
// Supports exactly what the combinatorial bounds need: small multiplication,
// exact small division, factorial, and powers.
class BigUint {
 public:
  BigUint() : limbs_{0} {}
  explicit BigUint(uint64_t v);

  BigUint& mul(uint32_t m);
  // Exact division; throws std::invalid_argument on a nonzero remainder.
  BigUint& div_exact(uint32_t d);

  static BigUint factorial(unsigned n);
  static BigUint pow(uint32_t base, unsigned exp);

  bool fits_u64() const;
  uint64_t to_u64() const;  // throws std::overflow_error if it does not fit
  std::string to_string() const;

  bool operator==(const BigUint& other) const { return limbs_ == other.limbs_; }

 private:
  void trim();
  std::vector<uint32_t> limbs_;
};

}  // namespace cfrp
