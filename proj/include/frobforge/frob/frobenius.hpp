#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobforge/inv/invariants.hpp"

namespace frobforge {

/// C with every differential entry replaced by NF(f^q), q = p^e.
struct FrobeniusTwist {
  unsigned e;
  FreeComplex complex;
};

inline FrobeniusTwist twist_complex(const FreeComplex& C, unsigned e) {
  if (e == 0) throw DomainError("Frobenius exponent must be positive");
  std::vector<ModuleMap> maps;
  for (const auto& d : C.maps()) {
    maps.push_back(d.map_entries([e](const Polynomial& f) { return frobenius_power(f, e); }));
  }
  return {e, FreeComplex(C.ring(), C.rank(0), std::move(maps))};
}

/// m^[q] + I, the ideal the twisted differentials of a minimal complex lie in.
inline GroebnerBasis bracket_power_ideal(const RingPtr& R, unsigned e) {
  std::vector<Polynomial> gens = R->ideal().generators();
  for (std::size_t i = 0; i < R->nvars(); ++i) gens.push_back(frobenius_power(R->variable(i), e));
  return buchberger(Ideal(R->base(), gens));
}

struct TorRow {
  std::size_t i;
  bool is_zero;
  KDim kdim;
};

/// Tor_i(F^e_* R, M) for 1 <= i <= max_i as homology of the twisted minimal
/// resolution of M. Homology is taken with the untwisted R-structure, which
/// leaves vanishing and F_p-dimension unchanged.
inline std::vector<TorRow> tor_frobenius(const PresentedModule& M, unsigned e, std::size_t max_i) {
  auto res = free_resolution(M, max_i + 1);
  auto tw = twist_complex(res.complex, e);
  std::vector<TorRow> rows;
  for (std::size_t i = 1; i <= max_i; ++i) {
    auto v = evaluate(homology(tw.complex, static_cast<std::ptrdiff_t>(i)));
    rows.push_back({i, v.is_zero, v.kdim});
  }
  return rows;
}

/// F^e_* R as an R-module: generators x^a with 0 <= a_j < q, where r acts
/// on F_* R through r^q.
struct FrobeniusPushforward {
  unsigned e;
  std::uint64_t q;
  std::vector<ExponentVector> basis;
  PresentedModule module;
  /// mult[j] has column b equal to x_j * x^b expanded in the basis.
  std::vector<ModuleMap> mult;

  std::size_t index_of(const ExponentVector& a) const {
    std::size_t idx = 0;
    for (std::size_t v = 0; v < a.size(); ++v) idx = idx * q + a[v];
    return idx;
  }
};

inline constexpr std::uint64_t kDefaultPushforwardBound = 256;

inline FrobeniusPushforward pushforward(const RingPtr& R, unsigned e,
                                        std::uint64_t bound = kDefaultPushforwardBound) {
  if (e == 0) throw DomainError("Frobenius exponent must be positive");
  R->require_nonzero();
  const std::size_t n = R->nvars();
  const std::uint64_t q = frobenius_q(R->characteristic(), e);
  std::uint64_t count = 1;
  for (std::size_t v = 0; v < n; ++v) {
    count *= q;
    if (count > bound) {
      throw ResourceError("pushforward needs more than " + std::to_string(bound) + " generators (q = " +
                          std::to_string(q) + ", n = " + std::to_string(n) + ")");
    }
  }
  FrobeniusPushforward F{e, q, {}, PresentedModule(), {}};
  // Basis in mixed radix order, first variable most significant.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    ExponentVector a(n);
    std::uint64_t rest = idx;
    for (std::size_t v = n; v-- > 0;) {
      a.set(v, static_cast<std::uint32_t>(rest % q));
      rest /= q;
    }
    F.basis.push_back(a);
  }
  const auto& base = R->base();
  // x^m = (x^{m div q})^q * x^{m mod q}; coefficients in F_p are their own q-th roots.
  auto expand = [&](const Polynomial& f) {
    gb::MVec v;
    for (const auto& t : f.terms()) {
      ExponentVector root(n), rem(n);
      for (std::size_t j = 0; j < n; ++j) {
        root.set(j, static_cast<std::uint32_t>(t.mon[j] / q));
        rem.set(j, static_cast<std::uint32_t>(t.mon[j] % q));
      }
      v.push_back({root, static_cast<std::uint32_t>(F.index_of(rem)), t.coef});
    }
    return v;
  };
  auto to_column = [&](const gb::MVec& v) {
    std::vector<std::vector<Term>> parts(count);
    for (const auto& t : v) parts[t.pos].push_back({t.mon, t.coef});
    std::vector<Polynomial> col;
    for (auto& p : parts) col.push_back(Polynomial(base, std::move(p)));
    return col;
  };
  std::vector<std::vector<Polynomial>> columns;
  for (const auto& g : R->ideal().generators()) {
    for (const auto& b : F.basis) columns.push_back(to_column(expand(g * Polynomial::monomial(base, b))));
  }
  ModuleMap rel(R, count, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < count; ++r) rel.set(r, c, columns[c][r]);
  }
  F.module = PresentedModule(rel);
  for (std::size_t j = 0; j < n; ++j) {
    ModuleMap m(R, count, count);
    for (std::size_t b = 0; b < count; ++b) {
      auto col = to_column(expand(R->variable(j) * Polynomial::monomial(base, F.basis[b])));
      for (std::size_t r = 0; r < count; ++r) m.set(r, b, col[r]);
    }
    F.mult.push_back(std::move(m));
  }
  if (R->is_polynomial_ring() && F.module.presentation().cols() != 0) {
    throw VerificationFailure("pushforward of a polynomial ring is not free");
  }
  return F;
}

struct CrosscheckRow {
  std::size_t i;
  KDim twisted;
  KDim pushforward;
  bool agree;
};

struct CrosscheckReport {
  unsigned e;
  std::vector<CrosscheckRow> rows;
  bool consistent;
};

/// dim_{F_p} Tor_i(F^e_* R, M) two ways: twisted resolution of M, and the
/// pushforward presented module resolved and tensored with M.
inline CrosscheckReport tor_crosscheck(const PresentedModule& M, unsigned e, std::size_t max_i,
                                       std::uint64_t bound = kDefaultPushforwardBound) {
  auto F = pushforward(M.ring(), e, bound);
  auto twisted = tor_frobenius(M, e, max_i);
  auto direct = tor_table(F.module, M, max_i);
  CrosscheckReport rep{e, {}, true};
  for (std::size_t i = 1; i <= max_i; ++i) {
    CrosscheckRow row{i, twisted[i - 1].kdim, direct[i].kdim, twisted[i - 1].kdim == direct[i].kdim};
    rep.consistent = rep.consistent && row.agree;
    rep.rows.push_back(row);
  }
  return rep;
}

struct Witness {
  unsigned e;
  std::size_t i;
};

struct KunzReport {
  bool regular;
  std::optional<Witness> witness;
  std::size_t max_i;
  /// (e, rows) for each tested exponent.
  std::vector<std::pair<unsigned, std::vector<TorRow>>> evidence;
};

/// Tor_i(F^e_* R, k) for each e and 1 <= i <= dim R + 1; R is regular iff
/// every entry vanishes.
inline KunzReport kunz_test(const RingPtr& R, const std::vector<unsigned>& e_list) {
  R->require_nonzero();
  const std::size_t max_i = static_cast<std::size_t>(R->dimension().value) + 1;
  KunzReport rep{true, std::nullopt, max_i, {}};
  auto k = PresentedModule::residue_field(R);
  for (unsigned e : e_list) {
    auto rows = tor_frobenius(k, e, max_i);
    for (const auto& r : rows) {
      if (!r.is_zero && rep.regular) {
        rep.regular = false;
        rep.witness = Witness{e, r.i};
      }
    }
    rep.evidence.emplace_back(e, std::move(rows));
  }
  return rep;
}

struct TheoremACase {
  unsigned e;
  std::vector<TorRow> tor;
  bool vanishing;
  bool exact;
  bool in_bracket_power;
  std::vector<std::size_t> twisted_betti;
  long twisted_pd;
};

struct TheoremAReport {
  bool applicable;
  long pd;
  std::vector<std::size_t> betti;
  std::vector<TheoremACase> cases;
  std::vector<std::string> failures;

  bool consistent() const noexcept { return failures.empty(); }
};

/// For M of finite pd: Tor_i(F^e_* R, M) = 0 for 1 <= i <= pd + 1, the twisted
/// minimal resolution is exact and minimal, and the twisted module has the
/// same Betti numbers and pd.
inline TheoremAReport theorem_a_verify(const PresentedModule& M, const std::vector<unsigned>& e_list) {
  auto verdict = pd_verdict(M);
  TheoremAReport rep{verdict.finite, verdict.value, verdict.betti, {}, {}};
  if (!verdict.finite || M.is_zero()) return rep;
  const auto& R = M.ring();
  const std::size_t pd = static_cast<std::size_t>(verdict.value);
  auto res = free_resolution(M, pd + 1);
  for (unsigned e : e_list) {
    TheoremACase c{e, tor_frobenius(M, e, pd + 1), true, true, true, {}, -1};
    for (const auto& r : c.tor) c.vanishing = c.vanishing && r.is_zero;
    auto tw = twist_complex(res.complex, e);
    for (std::size_t i = 1; i <= tw.complex.length(); ++i) {
      c.exact = c.exact && homology(tw.complex, static_cast<std::ptrdiff_t>(i)).is_zero;
    }
    auto bracket = bracket_power_ideal(R, e);
    for (const auto& d : tw.complex.maps()) {
      for (std::size_t r = 0; r < d.rows(); ++r) {
        for (std::size_t col = 0; col < d.cols(); ++col) {
          c.in_bracket_power = c.in_bracket_power && ideal_contains(bracket, d.at(r, col));
        }
      }
    }
    PresentedModule twisted_module =
        tw.complex.length() == 0 ? PresentedModule::free(R, tw.complex.rank(0)) : PresentedModule(tw.complex.map(1));
    c.twisted_betti = betti(twisted_module, pd + 1).betti;
    c.twisted_pd = pd_verdict(twisted_module).value;
    std::string tag = "e=" + std::to_string(e) + ": ";
    if (!c.vanishing) rep.failures.push_back(tag + "Tor_i(F_*R, M) nonzero for some 1 <= i <= pd + 1");
    if (!c.exact) rep.failures.push_back(tag + "twisted resolution has higher homology");
    if (!c.in_bracket_power) rep.failures.push_back(tag + "twisted differential entry outside m^[q] + I");
    std::vector<std::size_t> padded = verdict.betti;
    padded.resize(pd + 2, 0);
    if (c.twisted_betti != padded) rep.failures.push_back(tag + "Betti numbers changed under twisting");
    if (c.twisted_pd != verdict.value) rep.failures.push_back(tag + "pd changed under twisting");
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

struct TheoremBCase {
  unsigned e;
  std::vector<TorRow> tor;
  std::optional<std::size_t> witness;  // first i with Tor_i != 0
  bool agrees;
};

struct TheoremBReport {
  bool pd_finite;
  long pd;
  std::size_t witness_degree;
  std::size_t max_i;
  std::vector<TheoremBCase> cases;

  bool consistent() const noexcept {
    for (const auto& c : cases) {
      if (!c.agrees) return false;
    }
    return true;
  }
};

/// Finite-window contrapositive: infinite pd must show some nonzero
/// Tor_i(F^e_* R, M) with i <= dim R + 1 for every tested e; finite pd shows
/// none.
inline TheoremBReport theorem_b_verify(const PresentedModule& M, const std::vector<unsigned>& e_list) {
  auto verdict = pd_verdict(M);
  const std::size_t max_i = static_cast<std::size_t>(M.ring()->dimension().value) + 1;
  TheoremBReport rep{verdict.finite, verdict.value, verdict.witness_degree, max_i, {}};
  for (unsigned e : e_list) {
    TheoremBCase c{e, tor_frobenius(M, e, max_i), std::nullopt, true};
    for (const auto& r : c.tor) {
      if (!r.is_zero) {
        c.witness = r.i;
        break;
      }
    }
    c.agrees = verdict.finite ? !c.witness.has_value() : c.witness.has_value();
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

enum class ExtVerdict { vanishing_with_finite_id, consistent_with_finite_id, nonvanishing, inconsistent };

inline const char* to_string(ExtVerdict v) {
  switch (v) {
    case ExtVerdict::vanishing_with_finite_id:
      return "vanishing, finite id";
    case ExtVerdict::consistent_with_finite_id:
      return "vanishing, consistent with finite id";
    case ExtVerdict::nonvanishing:
      return "nonvanishing";
    case ExtVerdict::inconsistent:
      return "inconsistent";
  }
  return "";
}

struct ExtFrobeniusReport {
  unsigned e;
  std::vector<TorRow> ext;  // rows i = 1..max_i
  IdProbe probe;
  ExtVerdict verdict;

  bool consistent() const noexcept { return verdict != ExtVerdict::inconsistent; }
};

/// Ext^i(F^e_* R, M), 1 <= i <= max_i, against the id probe of M: finite id
/// requires vanishing; vanishing alone is only reported as consistent.
inline ExtFrobeniusReport ext_frobenius(const PresentedModule& M, unsigned e, std::size_t max_i,
                                        std::uint64_t bound = kDefaultPushforwardBound) {
  auto F = pushforward(M.ring(), e, bound);
  auto table = ext_table(F.module, M, max_i);
  std::size_t probe_bound = std::max(max_i, ring_depth(M.ring()) + 1);
  ExtFrobeniusReport rep{e, {}, id_probe(M, probe_bound), ExtVerdict::nonvanishing};
  bool vanish = true;
  for (std::size_t i = 1; i <= max_i; ++i) {
    rep.ext.push_back({i, table[i].is_zero, table[i].kdim});
    vanish = vanish && table[i].is_zero;
  }
  if (rep.probe.determined()) {
    rep.verdict = vanish ? ExtVerdict::vanishing_with_finite_id : ExtVerdict::inconsistent;
  } else if (vanish) {
    rep.verdict = ExtVerdict::consistent_with_finite_id;
  }
  return rep;
}

}  // namespace frobforge
