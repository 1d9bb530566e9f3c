#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qtilt {

/// Prime field GF(p) for machine-word primes (p < 2^31).
class Field {
 public:
  explicit Field(uint32_t p = 2) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) {
      throw std::invalid_argument("characteristic " + std::to_string(p) + " is not a supported prime");
    }
  }

  static bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

  uint32_t characteristic() const { return p_; }
  bool binary() const { return p_ == 2; }

  uint32_t reduce(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    return static_cast<uint32_t>(r < 0 ? r + p_ : r);
  }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint64_t r = 1, b = a % p_;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<uint32_t>(r);
  }
  uint32_t inv(uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in GF(p)");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  uint32_t p_;
};

}  // namespace qtilt
