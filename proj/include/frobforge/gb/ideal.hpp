#pragma once

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "frobforge/arith/polynomial.hpp"
#include "frobforge/gb/buchberger.hpp"

namespace frobforge {

namespace gb {

inline Context context_of(const PolyRing& ring) { return {&ring.field, &ring.order, ring.nvars()}; }

inline MVec to_mvec(const Polynomial& f, std::uint32_t pos = 0) {
  MVec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.mon, pos, t.coef});
  return v;
}

// Component `pos` of a module element, as a polynomial.
inline Polynomial component(const MVec& v, std::uint32_t pos, const PolyRingPtr& ring) {
  std::vector<Term> terms;
  for (const auto& t : v) {
    if (t.pos == pos) terms.push_back({t.mon, t.coef});
  }
  return Polynomial::from_sorted(ring, std::move(terms));
}

/// Kernel of P^n -> P^m / N, e_c |-> columns[c], where N is generated by
/// `relations`. Computed by eliminating the top m positions from the module
/// generated by (columns[c], e_{m+c}) together with (relations, 0).
/// Returned vectors live in P^n.
inline std::vector<MVec> syzygies(const std::vector<MVec>& columns, const std::vector<MVec>& relations,
                                  std::size_t m, const Context& ctx, const Options& opt = {}) {
  const std::size_t n = columns.size();
  std::vector<MVec> gens;
  gens.reserve(n + relations.size());
  for (std::size_t c = 0; c < n; ++c) {
    MVec v = columns[c];
    v.push_back({ExponentVector(ctx.nvars), static_cast<std::uint32_t>(m + c), 1});
    gens.push_back(std::move(v));
  }
  for (const auto& r : relations) {
    if (!r.empty()) gens.push_back(r);
  }
  auto basis = groebner_basis(gens, m + n, ctx, opt);
  std::vector<MVec> out;
  for (auto& g : basis) {
    if (g.front().pos < m) continue;
    for (auto& t : g) t.pos -= static_cast<std::uint32_t>(m);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace gb

/// Ideal of F_p[x_1..x_n]; zero generators are dropped.
class Ideal {
 public:
  explicit Ideal(PolyRingPtr ring) : ring_(std::move(ring)) {}
  Ideal(PolyRingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
      if (g.ring() && g.ring()->nvars() != ring_->nvars()) {
        throw StructuralError("ideal generator over a different number of variables");
      }
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  Ideal operator+(const Ideal& other) const {
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    return Ideal(ring_, std::move(g));
  }

 private:
  PolyRingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Reduced Groebner basis of an ideal: monic, no term of any element divisible
/// by another element's leading term; unique for the ring's order.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(PolyRingPtr ring, std::vector<gb::MVec> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {}

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const std::vector<gb::MVec>& raw() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }

  std::vector<Polynomial> elements() const {
    std::vector<Polynomial> out;
    out.reserve(basis_.size());
    for (const auto& g : basis_) out.push_back(gb::component(g, 0, ring_));
    return out;
  }

  bool contains_one() const noexcept { return basis_.size() == 1 && basis_[0].front().mon.is_one(); }

  std::vector<ExponentVector> leading_monomials() const {
    std::vector<ExponentVector> out;
    for (const auto& g : basis_) out.push_back(g.front().mon);
    return out;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.basis_ == b.basis_; }

 private:
  PolyRingPtr ring_;
  std::vector<gb::MVec> basis_;
};

inline GroebnerBasis buchberger(const Ideal& I, const gb::Options& opt = {}) {
  std::vector<gb::MVec> gens;
  for (const auto& g : I.generators()) gens.push_back(gb::to_mvec(g));
  return GroebnerBasis(I.ring(), gb::groebner_basis(gens, 1, gb::context_of(*I.ring()), opt));
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (f.ring() && G.ring() && f.ring()->nvars() != G.ring()->nvars()) {
    throw StructuralError("normal form across rings with different variable counts");
  }
  auto ctx = gb::context_of(*G.ring());
  auto r = gb::normal_form(gb::to_mvec(f), gb::reducer_of(G.raw()), ctx);
  return gb::component(r, 0, G.ring());
}

inline bool ideal_contains(const GroebnerBasis& G, const Polynomial& f) { return normal_form(f, G).is_zero(); }

/// (I : f) = {g : g f in I}, from the first coordinates of the syzygies of
/// (f, g_1, ..., g_k). Each generator is checked against membership in I.
inline Ideal colon_ideal(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("colon by the zero polynomial");
  const auto& ring = I.ring();
  auto ctx = gb::context_of(*ring);
  auto GI = buchberger(I);
  std::vector<gb::MVec> cols{gb::to_mvec(f)};
  for (const auto& g : GI.raw()) cols.push_back(g);
  auto syz = gb::syzygies(cols, {}, 1, ctx);
  std::vector<Polynomial> gens;
  for (const auto& s : syz) {
    Polynomial c = gb::component(s, 0, ring);
    if (!c.is_zero()) gens.push_back(c);
  }
  Ideal colon(ring, gens);
  auto reduced = buchberger(colon);
  for (const auto& g : reduced.elements()) {
    if (!ideal_contains(GI, g * f)) throw VerificationFailure("colon ideal generator fails membership");
  }
  return Ideal(ring, reduced.elements());
}

/// Result of a dimension computation; the zero ring has dimension -1.
struct KrullDimension {
  int value;
  bool zero_ring;
};

/// dim P/I as the largest set of variables S such that no leading monomial of
/// the Groebner basis is supported inside S.
inline KrullDimension krull_dimension(const GroebnerBasis& G) {
  if (G.contains_one()) return {-1, true};
  const std::size_t n = G.ring()->nvars();
  std::vector<std::uint32_t> masks;
  for (const auto& m : G.leading_monomials()) masks.push_back(m.support_mask());
  int best = 0;
  for (std::uint32_t S = 0; S < (1u << n); ++S) {
    int size = std::popcount(S);
    if (size <= best) continue;
    bool independent = std::none_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & ~S) == 0; });
    if (independent) best = size;
  }
  return {best, false};
}

}  // namespace frobforge
