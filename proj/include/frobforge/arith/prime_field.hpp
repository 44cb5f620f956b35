#pragma once

#include <cstdint>
#include <string>

#include "frobforge/error.hpp"

namespace frobforge {

/// Coefficient residue. Always canonical: 0 <= value < p.
using Coeff = std::uint32_t;

/// A verified prime p <= 2^31 - 1, so that a product of two residues fits in
/// 64 bits before reduction.
class Prime {
 public:
  static constexpr std::uint64_t kMax = (std::uint64_t{1} << 31) - 1;

  explicit Prime(std::uint64_t p) : value_(static_cast<std::uint32_t>(p)) {
    if (p < 2 || p > kMax) {
      throw DomainError("characteristic " + std::to_string(p) + " is outside [2, 2^31-1]");
    }
    if (!is_prime(p)) {
      throw DomainError(std::to_string(p) + " is not prime");
    }
  }

  std::uint32_t value() const noexcept { return value_; }

  static bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint32_t value_;
};

/// Arithmetic in F_p on canonical residues.
class PrimeField {
 public:
  explicit PrimeField(Prime p) : p_(p.value()) {}

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
  }

  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : static_cast<Coeff>(a + (p_ - b)); }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }

  Coeff inv(Coeff a) const {
    if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return from_int(t);
  }

  Coeff pow(Coeff a, std::uint64_t k) const noexcept {
    Coeff result = 1 % p_;
    Coeff base = a;
    while (k > 0) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace frobforge
