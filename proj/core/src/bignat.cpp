#include "excseq/bignat.hpp"

#include <stdexcept>

namespace excseq {

BigNat::BigNat(std::uint64_t value) {
  do {
    limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
    value /= kBase;
  } while (value != 0);
}

void BigNat::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigNat& BigNat::mul_small(std::uint64_t factor) {
  if (factor == 0) {
    limbs_.assign(1, 0);
    return *this;
  }
  unsigned __int128 carry = 0;
  for (auto& limb : limbs_) {
    unsigned __int128 acc = static_cast<unsigned __int128>(limb) * factor + carry;
    limb = static_cast<std::uint32_t>(acc % kBase);
    carry = acc / kBase;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
  return *this;
}

BigNat& BigNat::add(const BigNat& other) {
  const std::size_t size = std::max(limbs_.size(), other.limbs_.size());
  limbs_.resize(size, 0);
  std::uint64_t carry = 0;
  for (std::size_t k = 0; k < size; ++k) {
    std::uint64_t acc = carry + limbs_[k] + (k < other.limbs_.size() ? other.limbs_[k] : 0);
    limbs_[k] = static_cast<std::uint32_t>(acc % kBase);
    carry = acc / kBase;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

std::uint64_t BigNat::div_small(std::uint64_t divisor) {
  if (divisor == 0) throw std::domain_error("BigNat: division by zero");
  unsigned __int128 rem = 0;
  for (std::size_t k = limbs_.size(); k-- > 0;) {
    unsigned __int128 cur = rem * kBase + limbs_[k];
    limbs_[k] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint64_t>(rem);
}

BigNat& BigNat::div_small_exact(std::uint64_t divisor) {
  const std::uint64_t rem = div_small(divisor);
  if (rem != 0) throw std::domain_error("BigNat: division expected to be exact has remainder");
  return *this;
}

BigNat BigNat::binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) return BigNat(0);
  if (b > a - b) b = a - b;
  BigNat result(1);
  for (int k = 1; k <= b; ++k) {
    result.mul_small(static_cast<std::uint64_t>(a - b + k));
    result.div_small_exact(static_cast<std::uint64_t>(k));  // C(a-b+k, k) is integral
  }
  return result;
}

BigNat BigNat::power(std::uint64_t base, unsigned exp) {
  BigNat result(1);
  for (unsigned k = 0; k < exp; ++k) result.mul_small(base);
  return result;
}

bool BigNat::fits_u64() const {
  // 3 limbs reach at most 10^27; compare against 2^64-1 explicitly.
  if (limbs_.size() > 3) return false;
  unsigned __int128 value = 0;
  for (std::size_t k = limbs_.size(); k-- > 0;) value = value * kBase + limbs_[k];
  return value <= static_cast<unsigned __int128>(UINT64_MAX);
}

std::uint64_t BigNat::as_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigNat: value does not fit in 64 bits");
  std::uint64_t value = 0;
  for (std::size_t k = limbs_.size(); k-- > 0;) value = value * kBase + limbs_[k];
  return value;
}

std::string BigNat::to_string() const {
  std::string out = std::to_string(limbs_.back());
  char buf[10];
  for (std::size_t k = limbs_.size() - 1; k-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", limbs_[k]);
    out += buf;
  }
  return out;
}

std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() <=> b.limbs_.size();
  for (std::size_t k = a.limbs_.size(); k-- > 0;) {
    if (a.limbs_[k] != b.limbs_[k]) return a.limbs_[k] <=> b.limbs_[k];
  }
  return std::strong_ordering::equal;
}

}  // namespace excseq
