#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace excseq {

// Arbitrary-precision unsigned integer, base 10^9 limbs, little endian.
// Covers exactly what the counting closed forms need: multiply by a small
// factor, divide exactly by a small divisor, add, compare, print.
class BigNat {
 public:
  BigNat() : limbs_{0} {}
  BigNat(std::uint64_t value);  // NOLINT: implicit by design, counts compare against literals

  // C(a, b) via the product formula with stepwise exact division.
  static BigNat binomial(int a, int b);
  static BigNat power(std::uint64_t base, unsigned exp);

  BigNat& mul_small(std::uint64_t factor);
  BigNat& add(const BigNat& other);

  // In-place quotient; returns the remainder.  divisor != 0.
  std::uint64_t div_small(std::uint64_t divisor);
  // Throws std::domain_error if the division leaves a remainder.
  BigNat& div_small_exact(std::uint64_t divisor);

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
  bool fits_u64() const;
  std::uint64_t as_u64() const;  // throws std::overflow_error when !fits_u64()

  std::string to_string() const;

  friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b);

 private:
  static constexpr std::uint32_t kBase = 1'000'000'000u;
  std::vector<std::uint32_t> limbs_;

  void trim();
};

}  // namespace excseq
