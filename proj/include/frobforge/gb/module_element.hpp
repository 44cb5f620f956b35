#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobforge/arith/monomial.hpp"
#include "frobforge/arith/prime_field.hpp"

namespace frobforge::gb {

/// Term of a free-module element: coef * x^mon * e_pos.
struct MTerm {
  ExponentVector mon;
  std::uint32_t pos;
  Coeff coef;

  friend bool operator==(const MTerm&, const MTerm&) = default;
};

/// Element of P^r, terms strictly descending in the position-over-term order.
using MVec = std::vector<MTerm>;

/// Everything the engine needs to do arithmetic on module elements.
struct Context {
  const PrimeField* field;
  const MonomialOrder* order;
  std::size_t nvars;

  // Position over term; smaller position index is larger.
  int compare(const MTerm& a, const MTerm& b) const noexcept {
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return order->compare(a.mon, b.mon);
  }
};

/// f[from..] + c * m * g, all sorted descending.
inline MVec axpy(const MVec& f, std::size_t from, Coeff c, const ExponentVector& m, const MVec& g,
                 const Context& ctx) {
  MVec out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  MTerm scaled{};
  bool have = false;
  auto fetch = [&] {
    if (j < g.size()) {
      scaled.mon = g[j].mon * m;
      scaled.pos = g[j].pos;
      scaled.coef = ctx.field->mul(c, g[j].coef);
      have = true;
    } else {
      have = false;
    }
  };
  fetch();
  while (i < f.size() || have) {
    int cmp = (i == f.size()) ? -1 : !have ? 1 : ctx.compare(f[i], scaled);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      if (scaled.coef != 0) out.push_back(scaled);
      ++j;
      fetch();
    } else {
      Coeff v = ctx.field->add(f[i].coef, scaled.coef);
      if (v != 0) out.push_back({f[i].mon, f[i].pos, v});
      ++i;
      ++j;
      fetch();
    }
  }
  return out;
}

inline void make_monic(MVec& f, const Context& ctx) {
  if (f.empty() || f.front().coef == 1) return;
  Coeff inv = ctx.field->inv(f.front().coef);
  for (auto& t : f) t.coef = ctx.field->mul(t.coef, inv);
}

inline void scale(MVec& f, Coeff c, const Context& ctx) {
  if (c == 0) {
    f.clear();
    return;
  }
  for (auto& t : f) t.coef = ctx.field->mul(t.coef, c);
}

/// Leading-term data kept alongside each basis element for divisor search.
struct Lead {
  ExponentVector mon;
  std::uint32_t pos = 0;
  std::uint32_t mask = 0;
};

inline Lead lead_of(const MVec& f) { return {f.front().mon, f.front().pos, f.front().mon.support_mask()}; }

/// Basis view used by the division algorithm. Elements are monic.
class Reducer {
 public:
  void add(const MVec* f) {
    elems_.push_back(f);
    leads_.push_back(lead_of(*f));
  }
  std::size_t size() const noexcept { return elems_.size(); }

  // Reducer whose leading term divides t; smallest degree, then earliest index.
  const MVec* find(const MTerm& t, ExponentVector* cofactor) const {
    std::uint32_t tmask = t.mon.support_mask();
    std::size_t best = elems_.size();
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      const Lead& L = leads_[k];
      if (L.pos != t.pos || (L.mask & ~tmask) != 0 || !L.mon.divides(t.mon)) continue;
      if (best == elems_.size() || L.mon.degree() < leads_[best].mon.degree()) best = k;
    }
    if (best == elems_.size()) return nullptr;
    *cofactor = quotient(t.mon, leads_[best].mon);
    return elems_[best];
  }

 private:
  std::vector<const MVec*> elems_;
  std::vector<Lead> leads_;
};

/// Full normal form: no term of the result is divisible by a leading term.
inline MVec normal_form(MVec f, const Reducer& basis, const Context& ctx) {
  MVec rem;
  std::size_t head = 0;
  ExponentVector cof;
  while (head < f.size()) {
    const MVec* g = basis.find(f[head], &cof);
    if (g == nullptr) {
      rem.push_back(f[head++]);
      continue;
    }
    Coeff c = ctx.field->neg(f[head].coef);
    f = axpy(f, head, c, cof, *g, ctx);
    head = 0;
  }
  return rem;
}

/// Only the leading term is made irreducible.
inline MVec top_reduce(MVec f, const Reducer& basis, const Context& ctx) {
  ExponentVector cof;
  while (!f.empty()) {
    const MVec* g = basis.find(f.front(), &cof);
    if (g == nullptr) break;
    f = axpy(f, 0, ctx.field->neg(f.front().coef), cof, *g, ctx);
  }
  return f;
}

inline std::string serialize(const MVec& f) {
  std::string out;
  for (const auto& t : f) {
    if (!out.empty()) out += ' ';
    out += std::to_string(t.pos) + ':' + std::to_string(t.coef) + ':';
    for (std::size_t v = 0; v < t.mon.size(); ++v) {
      if (v) out += '.';
      out += std::to_string(t.mon[v]);
    }
  }
  return out;
}

}  // namespace frobforge::gb
