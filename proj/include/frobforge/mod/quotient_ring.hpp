#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frobforge/gb/ideal.hpp"

namespace frobforge {

/// R = P/I together with the reduced Groebner basis of I. All local notions
/// (minimality, depth, Bass and Betti numbers) are taken at the maximal ideal
/// m = (x_1, ..., x_n), so I must lie inside m.
class QuotientRing {
 public:
  QuotientRing(PolyRingPtr base, Ideal ideal) : base_(std::move(base)), ideal_(std::move(ideal)) {
    gb_ = buchberger(ideal_);
    zero_ring_ = gb_.contains_one();
    if (!zero_ring_) {
      for (const auto& g : gb_.raw()) {
        if (g.back().mon.is_one()) {
          throw DomainError("ideal is not contained in the maximal ideal generated by the variables");
        }
      }
    }
  }

  const PolyRingPtr& base() const noexcept { return base_; }
  const PolyRing& poly() const noexcept { return *base_; }
  const Ideal& ideal() const noexcept { return ideal_; }
  const GroebnerBasis& gb() const noexcept { return gb_; }
  std::size_t nvars() const noexcept { return base_->nvars(); }
  std::uint32_t characteristic() const noexcept { return base_->characteristic(); }
  const PrimeField& field() const noexcept { return base_->field; }
  gb::Context context() const { return gb::context_of(*base_); }

  bool is_zero_ring() const noexcept { return zero_ring_; }
  void require_nonzero() const {
    if (zero_ring_) throw DomainError("operation refused on the zero ring (1 lies in the ideal)");
  }

  bool is_polynomial_ring() const noexcept { return gb_.size() == 0; }

  Polynomial reduce(const Polynomial& f) const { return normal_form(f, gb_); }

  gb::MVec reduce(gb::MVec v) const {
    if (gb_.size() == 0 || v.empty()) return v;
    // Reduction mod I acts position by position.
    auto ctx = context();
    gb::MVec out;
    std::size_t start = 0;
    while (start < v.size()) {
      std::size_t end = start;
      while (end < v.size() && v[end].pos == v[start].pos) ++end;
      gb::MVec piece(v.begin() + static_cast<std::ptrdiff_t>(start), v.begin() + static_cast<std::ptrdiff_t>(end));
      std::uint32_t pos = v[start].pos;
      for (auto& t : piece) t.pos = 0;
      auto r = gb::normal_form(std::move(piece), gb::reducer_of(gb_.raw()), ctx);
      for (auto& t : r) out.push_back({t.mon, pos, t.coef});
      start = end;
    }
    return out;
  }

  Polynomial zero() const { return Polynomial(base_); }
  Polynomial one() const { return Polynomial::constant(base_, 1); }
  Polynomial constant(std::int64_t c) const { return Polynomial::constant(base_, c); }
  Polynomial variable(std::size_t i) const { return Polynomial::variable(base_, i); }

  /// Generators of I placed at position `pos`, for module computations over R.
  void append_relations(std::vector<gb::MVec>& out, std::uint32_t pos) const {
    for (const auto& g : gb_.raw()) {
      gb::MVec v = g;
      for (auto& t : v) t.pos = pos;
      out.push_back(std::move(v));
    }
  }

  KrullDimension dimension() const { return krull_dimension(gb_); }

  friend bool operator==(const QuotientRing& a, const QuotientRing& b) {
    return *a.base_ == *b.base_ && a.gb_ == b.gb_;
  }

 private:
  PolyRingPtr base_;
  Ideal ideal_;
  GroebnerBasis gb_;
  bool zero_ring_ = false;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

inline RingPtr make_ring(PolyRingPtr base, std::vector<Polynomial> ideal_gens = {}) {
  Ideal I(base, std::move(ideal_gens));
  return std::make_shared<const QuotientRing>(base, std::move(I));
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw StructuralError("objects live over different rings");
}

}  // namespace frobforge
