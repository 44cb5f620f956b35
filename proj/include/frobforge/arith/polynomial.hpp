#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "frobforge/arith/monomial.hpp"
#include "frobforge/arith/prime_field.hpp"

namespace frobforge {

/// Ambient polynomial ring F_p[x_1..x_n] with a monomial order.
struct PolyRing {
  PrimeField field;
  std::vector<std::string> vars;
  MonomialOrder order;

  PolyRing(Prime p, std::vector<std::string> variables, OrderKind kind = OrderKind::grevlex)
      : field(p), vars(std::move(variables)), order(kind, vars.size()) {
    if (vars.size() > kMaxVars) {
      throw StructuralError("at most " + std::to_string(kMaxVars) + " variables are supported");
    }
  }

  PolyRing(Prime p, std::vector<std::string> variables, MonomialOrder ord)
      : field(p), vars(std::move(variables)), order(std::move(ord)) {
    if (order.ranking().size() != vars.size()) {
      throw StructuralError("monomial order does not match the variable count");
    }
  }

  std::size_t nvars() const noexcept { return vars.size(); }
  std::uint32_t characteristic() const noexcept { return field.characteristic(); }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field == b.field && a.vars == b.vars && a.order == b.order;
  }
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

inline PolyRingPtr make_poly_ring(std::uint64_t p, std::vector<std::string> vars,
                                  OrderKind kind = OrderKind::grevlex) {
  return std::make_shared<const PolyRing>(Prime(p), std::move(vars), kind);
}

struct Term {
  ExponentVector mon;
  Coeff coef;

  friend bool operator==(const Term&, const Term&) = default;
};

namespace detail {

// Sorts descending, merges equal monomials, drops zeros.
inline void canonicalize(std::vector<Term>& terms, const PrimeField& field, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mon, b.mon) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = terms[i];
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mon == acc.mon) {
      acc.coef = field.add(acc.coef, terms[j].coef);
      ++j;
    }
    if (acc.coef != 0) terms[out++] = acc;
    i = j;
  }
  terms.resize(out);
}

// a + scale*b on sorted term lists.
inline std::vector<Term> add_scaled(const std::vector<Term>& a, const std::vector<Term>& b, Coeff scale,
                                    const PrimeField& field, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : order.compare(a[i].mon, b[j].mon);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Coeff v = field.mul(scale, b[j].coef);
      if (v != 0) out.push_back({b[j].mon, v});
      ++j;
    } else {
      Coeff v = field.add(a[i].coef, field.mul(scale, b[j].coef));
      if (v != 0) out.push_back({a[i].mon, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Sparse polynomial: terms strictly descending in the ring's order, no zero
/// coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

  Polynomial(PolyRingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
      if (t.mon.size() != ring_->nvars()) {
        throw StructuralError("term has " + std::to_string(t.mon.size()) + " exponents, ring has " +
                              std::to_string(ring_->nvars()) + " variables");
      }
    }
    detail::canonicalize(terms_, ring_->field, ring_->order);
  }

  // Trusted constructor for term lists that are already canonical.
  static Polynomial from_sorted(PolyRingPtr ring, std::vector<Term> terms) {
    Polynomial f(std::move(ring));
    f.terms_ = std::move(terms);
    return f;
  }

  static Polynomial constant(PolyRingPtr ring, std::int64_t c) {
    Coeff v = ring->field.from_int(c);
    std::size_t n = ring->nvars();
    Polynomial f(std::move(ring));
    if (v != 0) f.terms_.push_back({ExponentVector(n), v});
    return f;
  }

  static Polynomial variable(PolyRingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) throw StructuralError("variable index out of range");
    std::size_t n = ring->nvars();
    Polynomial f(std::move(ring));
    f.terms_.push_back({ExponentVector::unit(n, index), 1});
    return f;
  }

  static Polynomial monomial(PolyRingPtr ring, const ExponentVector& mon, std::int64_t c = 1) {
    return Polynomial(ring, {{mon, ring->field.from_int(c)}});
  }

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }

  Coeff constant_coeff() const noexcept {
    if (terms_.empty() || !terms_.back().mon.is_one()) return 0;
    return terms_.back().coef;
  }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }

  std::uint64_t total_degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
  }
  std::uint64_t min_degree() const noexcept {
    std::uint64_t d = ~std::uint64_t{0};
    for (const auto& t : terms_) d = std::min(d, t.mon.degree());
    return d;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = ring_->field.neg(t.coef);
    return r;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    check_compatible(f, g);
    return from_sorted(f.ring_, detail::add_scaled(f.terms_, g.terms_, 1, f.ring_->field, f.ring_->order));
  }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    check_compatible(f, g);
    const auto& F = f.ring_->field;
    return from_sorted(f.ring_, detail::add_scaled(f.terms_, g.terms_, F.neg(1 % F.characteristic()), F,
                                                    f.ring_->order));
  }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    check_compatible(f, g);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
    const auto& F = f.ring_->field;
    std::vector<Term> prod;
    prod.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& a : f.terms_) {
      for (const auto& b : g.terms_) prod.push_back({a.mon * b.mon, F.mul(a.coef, b.coef)});
    }
    detail::canonicalize(prod, F, f.ring_->order);
    return from_sorted(f.ring_, std::move(prod));
  }

  Polynomial scaled(Coeff c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef = ring_->field.mul(t.coef, c);
    return r;
  }

  Polynomial times_monomial(const ExponentVector& m, Coeff c = 1) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon * m, ring_->field.mul(t.coef, c)});
    return r;
  }

  Polynomial pow(std::uint64_t k) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return result;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field.inv(leading_term().coef));
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (f.terms_ != g.terms_) return false;
    if (f.ring_ == g.ring_ || f.terms_.empty()) return true;
    return f.ring_ && g.ring_ && *f.ring_ == *g.ring_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      if (!first) out += " + ";
      first = false;
      std::string mon;
      for (std::size_t v = 0; v < t.mon.size(); ++v) {
        if (t.mon[v] == 0) continue;
        if (!mon.empty()) mon += "*";
        mon += ring_->vars[v];
        if (t.mon[v] > 1) mon += "^" + std::to_string(t.mon[v]);
      }
      if (mon.empty()) {
        out += std::to_string(t.coef);
      } else if (t.coef == 1) {
        out += mon;
      } else {
        out += std::to_string(t.coef) + "*" + mon;
      }
    }
    return out;
  }

  static void check_compatible(const Polynomial& f, const Polynomial& g) {
    if (!f.ring_ || !g.ring_) throw StructuralError("polynomial without a ring");
    if (f.ring_ == g.ring_) return;
    if (f.ring_->nvars() != g.ring_->nvars()) {
      throw StructuralError("polynomials over " + std::to_string(f.ring_->nvars()) + " and " +
                            std::to_string(g.ring_->nvars()) + " variables");
    }
    if (!(*f.ring_ == *g.ring_)) throw StructuralError("polynomials over different rings");
  }

 private:
  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

/// f^(p^e), computed by scaling exponents: coefficients of F_p are fixed by
/// Frobenius and the cross terms of (a+b)^p vanish in characteristic p.
inline Polynomial frobenius_power(const Polynomial& f, unsigned e) {
  if (e == 0) throw DomainError("Frobenius exponent must be positive");
  const auto& ring = f.ring();
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= ring->characteristic();
    if (q > kMaxExponent) throw ResourceError("p^e exceeds the exponent range");
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.mon.scaled(q), t.coef});
  // Scaling by q preserves the order, so the result stays canonical.
  return Polynomial::from_sorted(ring, std::move(terms));
}

inline std::uint64_t frobenius_q(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxExponent) throw ResourceError("p^e exceeds the exponent range");
  }
  return q;
}

}  // namespace frobforge
