#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "frobforge/error.hpp"

namespace frobforge {

/// Upper bound on the number of ring variables. Exponents live inline so that
/// monomial arithmetic never allocates.
inline constexpr std::size_t kMaxVars = 16;

/// Exponents are 32-bit; every operation that can grow them checks for overflow.
inline constexpr std::uint64_t kMaxExponent = 0x7fffffffu;

class ExponentVector {
 public:
  ExponentVector() = default;

  explicit ExponentVector(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) {
      throw StructuralError("at most " + std::to_string(kMaxVars) + " variables are supported");
    }
  }

  ExponentVector(std::initializer_list<std::uint32_t> exps) : ExponentVector(exps.size()) {
    std::size_t i = 0;
    for (auto e : exps) set(i++, e);
  }

  static ExponentVector from_span(std::span<const std::uint32_t> exps) {
    ExponentVector v(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) v.set(i, exps[i]);
    return v;
  }

  static ExponentVector unit(std::size_t nvars, std::size_t var) {
    ExponentVector v(nvars);
    v.set(var, 1);
    return v;
  }

  std::size_t size() const noexcept { return n_; }
  std::uint64_t degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return e_[i]; }

  void set(std::size_t i, std::uint64_t value) {
    if (value > kMaxExponent) throw ResourceError("exponent overflow");
    degree_ = degree_ - e_[i] + value;
    e_[i] = static_cast<std::uint32_t>(value);
  }

  bool is_one() const noexcept { return degree_ == 0; }

  // Bit i set iff variable i occurs; used to reject divisibility quickly.
  std::uint32_t support_mask() const noexcept {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e_[i] != 0) m |= (1u << i);
    }
    return m;
  }

  bool divides(const ExponentVector& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
      if (e_[i] > other.e_[i]) return false;
    }
    return true;
  }

  friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
    check_same_size(a, b);
    ExponentVector r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      std::uint64_t s = std::uint64_t{a.e_[i]} + b.e_[i];
      if (s > kMaxExponent) throw ResourceError("exponent overflow in monomial product");
      r.e_[i] = static_cast<std::uint32_t>(s);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  // Requires b | a.
  friend ExponentVector quotient(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.n_);
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      d += r.e_[i];
    }
    r.degree_ = d;
    return r;
  }

  friend bool coprime(const ExponentVector& a, const ExponentVector& b) noexcept {
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    }
    return true;
  }

  /// Multiplies every exponent by `factor`; throws on overflow.
  ExponentVector scaled(std::uint64_t factor) const {
    ExponentVector r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint64_t v = std::uint64_t{e_[i]} * factor;
      if (e_[i] != 0 && (v / e_[i] != factor || v > kMaxExponent)) {
        throw ResourceError("exponent overflow in Frobenius power");
      }
      r.e_[i] = static_cast<std::uint32_t>(v);
    }
    r.degree_ = degree_ * factor;
    return r;
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
    if (a.n_ != b.n_ || a.degree_ != b.degree_) return false;
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (a.e_[i] != b.e_[i]) return false;
    }
    return true;
  }

  static void check_same_size(const ExponentVector& a, const ExponentVector& b) {
    if (a.n_ != b.n_) throw StructuralError("exponent vectors of different lengths");
  }

 private:
  std::array<std::uint32_t, kMaxVars> e_{};
  std::uint64_t degree_ = 0;
  std::uint8_t n_ = 0;
};

enum class OrderKind { grevlex, lex };

/// Monomial order over a fixed variable ranking. `ranking[0]` is the largest
/// variable.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), ranking_(nvars) {
    std::iota(ranking_.begin(), ranking_.end(), std::size_t{0});
  }

  MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking)
      : kind_(kind), ranking_(std::move(ranking)) {
    std::vector<std::size_t> sorted = ranking_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i) throw StructuralError("variable ranking is not a permutation");
    }
    identity_ = std::is_sorted(ranking_.begin(), ranking_.end());
  }

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& ranking() const noexcept { return ranking_; }

  /// Three-way comparison: negative if a < b, zero if equal, positive if a > b.
  int compare(const ExponentVector& a, const ExponentVector& b) const noexcept {
    const std::size_t n = a.size();
    if (kind_ == OrderKind::grevlex) {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t k = n; k-- > 0;) {
        std::size_t v = identity_ ? k : ranking_[k];
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
      }
      return 0;
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t v = identity_ ? k : ranking_[k];
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) noexcept {
    return a.kind_ == b.kind_ && a.ranking_ == b.ranking_;
  }

 private:
  OrderKind kind_ = OrderKind::grevlex;
  std::vector<std::size_t> ranking_;
  bool identity_ = true;
};

inline std::string to_string(OrderKind k) { return k == OrderKind::grevlex ? "grevlex" : "lex"; }

}  // namespace frobforge
