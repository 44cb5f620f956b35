#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "frobforge/inv/koszul.hpp"

namespace frobforge {

/// Seeded source of bounded free complexes for exercising the acyclicity
/// lemma: Koszul complexes on random elements of m, direct sums of two of
/// them, and copies shifted up by zero terms in low degrees.
class RandomComplexes {
 public:
  explicit RandomComplexes(std::uint64_t seed) : rng_(seed) {
    add(2, {"x", "y"}, {});
    add(3, {"x", "y"}, {});
    add(2, {"x", "y", "z"}, {});
    add(2, {"x", "y"}, {{1, 1}});
    add(2, {"x", "y"}, {{2, 0}, {1, 1}});
    add(2, {"x"}, {{2}});
    auto base = make_poly_ring(3, {"x", "y"});
    rings_.push_back(make_ring(base, {Polynomial::variable(base, 0).pow(2) + Polynomial::variable(base, 1).pow(2)}));
  }

  FreeComplex next() {
    const RingPtr& r = rings_[rng_() % rings_.size()];
    FreeComplex C = koszul_piece(r);
    switch (rng_() % 6) {
      case 0:
        C = sum(C, koszul_piece(r));
        break;
      case 1:
        C = shift(C, 1 + rng_() % 2);
        break;
      case 2:
        C = shift(sum(C, koszul_piece(r)), 1);
        break;
      default:
        break;
    }
    return C;
  }

 private:
  // Ring with monomial ideal generators given by exponent vectors.
  void add(std::uint32_t p, std::vector<std::string> vars, std::vector<std::vector<std::uint32_t>> monomials) {
    auto base = make_poly_ring(p, std::move(vars));
    std::vector<Polynomial> gens;
    for (const auto& m : monomials) gens.push_back(Polynomial::monomial(base, ExponentVector::from_span(m)));
    rings_.push_back(make_ring(base, gens));
  }

  Polynomial element(const RingPtr& r, const std::vector<Polynomial>& vars) {
    Polynomial f = vars[rng_() % vars.size()].pow(1 + rng_() % 2);
    if (rng_() % 3 == 0) f = f + vars[rng_() % vars.size()] * vars[rng_() % vars.size()];
    if (rng_() % 5 == 0) f = f * (r->one() + vars[rng_() % vars.size()]);
    return f;
  }

  FreeComplex koszul_piece(const RingPtr& r) {
    const std::size_t n = r->nvars();
    if (rng_() % 8 == 0) return FreeComplex(r, 1, {ModuleMap(r, 1, 1)});
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(r->variable(i));
    std::vector<Polynomial> z;
    if (rng_() % 2) {
      // powers of distinct variables, possibly times a unit
      std::vector<Polynomial> order = vars;
      std::shuffle(order.begin(), order.end(), rng_);
      std::size_t len = 1 + rng_() % n;
      for (std::size_t i = 0; i < len; ++i) {
        Polynomial f = order[i].pow(1 + rng_() % 2);
        if (rng_() % 4 == 0) f = f * (r->one() + vars[rng_() % n]);
        z.push_back(f);
      }
    } else {
      std::size_t len = 1 + rng_() % (n + 1);
      for (std::size_t i = 0; i < len; ++i) z.push_back(element(r, vars));
    }
    return koszul_complex(r, z);
  }

  static ModuleMap padded(const FreeComplex& C, std::size_t i) {
    if (i <= C.length()) return C.map(i);
    return ModuleMap(C.ring(), C.rank(static_cast<std::ptrdiff_t>(i - 1)), 0);
  }

  static FreeComplex sum(const FreeComplex& A, const FreeComplex& B) {
    std::size_t len = std::max(A.length(), B.length());
    std::vector<ModuleMap> maps;
    for (std::size_t i = 1; i <= len; ++i) maps.push_back(direct_sum(padded(A, i), padded(B, i)));
    return FreeComplex(A.ring(), A.rank(0) + B.rank(0), std::move(maps));
  }

  // T_{i+s} = C_i, with zero terms in degrees < s.
  static FreeComplex shift(const FreeComplex& C, std::size_t s) {
    std::vector<ModuleMap> maps;
    for (std::size_t i = 1; i < s; ++i) maps.emplace_back(C.ring(), 0, 0);
    maps.emplace_back(C.ring(), 0, C.rank(0));
    for (std::size_t i = 1; i <= C.length(); ++i) maps.push_back(C.map(i));
    return FreeComplex(C.ring(), 0, std::move(maps));
  }

  std::mt19937_64 rng_;
  std::vector<RingPtr> rings_;
};

}  // namespace frobforge
