#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gin3 {

constexpr bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

/// Arithmetic context for the coefficient field Z/p. Elements are plain
/// int64 values in [0, p); products of two elements fit in int64 for any
/// p below 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t p) : p_(p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
      throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                  " is not a supported prime");
  }

  std::int64_t p() const { return p_; }

  std::int64_t reduce(std::int64_t a) const {
    a %= p_;
    return a < 0 ? a + p_ : a;
  }

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    const std::int64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    const std::int64_t s = a - b;
    return s < 0 ? s + p_ : s;
  }
  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return a * b % p_; }

  std::int64_t pow(std::int64_t a, std::int64_t e) const {
    std::int64_t r = 1;
    a = reduce(a);
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative inverse by the extended Euclidean algorithm.
  std::int64_t inv(std::int64_t a) const {
    a = reduce(a);
    if (a == 0) throw std::domain_error("PrimeField: zero has no inverse");
    std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      r0 -= q * r1;
      std::swap(r0, r1);
      t0 -= q * t1;
      std::swap(t0, t1);
    }
    return reduce(t0);
  }

 private:
  std::int64_t p_;
};

}  // namespace gin3
