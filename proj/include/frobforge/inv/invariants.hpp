#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobforge/inv/koszul.hpp"
#include "frobforge/mod/tor_ext.hpp"

namespace frobforge {

/// depth M; the zero module has infinite depth.
struct Depth {
  std::optional<std::size_t> value;

  bool infinite() const noexcept { return !value; }
  std::string to_string() const { return value ? std::to_string(*value) : "infinite"; }
  friend bool operator==(const Depth&, const Depth&) = default;
};

/// Least i with Ext^i(k, M) != 0.
inline Depth depth_by_ext(const PresentedModule& M) {
  if (M.is_zero()) return {};
  const std::size_t n = M.ring()->nvars();
  auto table = ext_table(PresentedModule::residue_field(M.ring()), M, n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (!table[i].is_zero) return {i};
  }
  throw VerificationFailure("Ext^i(k, M) vanishes for all i <= n on a nonzero module");
}

/// n - max{i : H_i(x_1..x_n; M) != 0}.
inline Depth depth_by_koszul(const PresentedModule& M) {
  if (M.is_zero()) return {};
  const std::size_t n = M.ring()->nvars();
  ModuleComplex K = tensor(koszul_on_variables(M.ring()), M);
  for (std::size_t i = n + 1; i-- > 0;) {
    if (!K.homology(static_cast<std::ptrdiff_t>(i)).is_zero) return {n - i};
  }
  throw VerificationFailure("Koszul homology vanishes on a nonzero module");
}

/// depth M computed both ways; a disagreement is an internal error.
inline Depth depth(const PresentedModule& M) {
  Depth e = depth_by_ext(M);
  Depth k = depth_by_koszul(M);
  if (!(e == k)) {
    throw VerificationFailure("depth via Ext (" + e.to_string() + ") differs from depth via Koszul (" +
                              k.to_string() + ")");
  }
  return e;
}

inline std::size_t ring_depth(const RingPtr& R) { return *depth(PresentedModule::free(R, 1)).value; }

inline std::vector<std::uint64_t> finite_kdims(const std::vector<DerivedValue>& values, const char* what) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].kdim.finite()) {
      throw VerificationFailure(std::string(what) + " in degree " + std::to_string(i) + " has infinite length");
    }
    out.push_back(*values[i].kdim.value);
  }
  return out;
}

/// mu_i(m, M) = dim_k Ext^i(k, M), 0 <= i <= max_i.
inline std::vector<std::uint64_t> bass_numbers(const PresentedModule& M, std::size_t max_i) {
  if (M.is_zero()) return std::vector<std::uint64_t>(max_i + 1, 0);
  return finite_kdims(ext_table(PresentedModule::residue_field(M.ring()), M, max_i), "Ext^i(k, M)");
}

/// pi_i(m, M) realized as dim_k Tor_i(k, M). This is the Enochs-Xu formula
/// at m; the cotorsion hypothesis behind it is not checked.
inline std::vector<std::uint64_t> enochs_xu_numbers(const PresentedModule& M, std::size_t max_i) {
  if (M.is_zero()) return std::vector<std::uint64_t>(max_i + 1, 0);
  return finite_kdims(tor_table(PresentedModule::residue_field(M.ring()), M, max_i), "Tor_i(k, M)");
}

struct IdProbe {
  /// id M when the window certifies it; -1 for the zero module.
  std::optional<long> id;
  std::vector<std::uint64_t> bass;
  std::size_t bound;

  bool determined() const noexcept { return id.has_value(); }
};

/// Bass numbers up to `bound`. Finite id = n is reported only when the last
/// nonzero mu_n has n <= depth R; otherwise the window is inconclusive.
inline IdProbe id_probe(const PresentedModule& M, std::size_t bound) {
  std::size_t dR = ring_depth(M.ring());
  if (bound < dR + 1) {
    throw DomainError("id probe bound " + std::to_string(bound) + " is below depth R + 1 = " + std::to_string(dR + 1));
  }
  IdProbe out{std::nullopt, bass_numbers(M, bound), bound};
  long last = -1;
  for (std::size_t i = 0; i <= bound; ++i) {
    if (out.bass[i] != 0) last = static_cast<long>(i);
  }
  if (last <= static_cast<long>(dR)) out.id = last;
  return out;
}

struct PdVerdict {
  bool finite;
  /// pd M when finite (-1 for the zero module).
  long value;
  /// Degree with beta_i != 0 beyond depth R when infinite.
  std::size_t witness_degree;
  std::vector<std::size_t> betti;
};

/// Resolves M to depth R + 1. Vanishing by then gives pd M; a nonzero
/// beta_{depth R + 1} rules out finite pd.
inline PdVerdict pd_verdict(const PresentedModule& M) {
  if (M.is_zero()) return {true, -1, 0, {}};
  std::size_t dR = ring_depth(M.ring());
  auto res = free_resolution(M, dR + 1);
  PdVerdict v{true, static_cast<long>(res.complex.length()), 0, res.betti()};
  if (res.complex.length() == dR + 1 || res.truncated) {
    v.finite = false;
    v.value = -1;
    v.witness_degree = dR + 1;
  }
  return v;
}

struct InvariantReport {
  Depth depth;
  std::vector<std::uint64_t> bass;
  std::vector<std::uint64_t> ex_numbers;
  int dim;
};

inline InvariantReport invariant_report(const PresentedModule& M, std::size_t max_i) {
  return {depth(M), bass_numbers(M, max_i), enochs_xu_numbers(M, max_i), M.ring()->dimension().value};
}

struct AcyclicityRow {
  std::size_t degree;
  Depth term_depth;
  bool homology_zero;
  Depth homology_depth;  // meaningful for degree >= 1
};

struct AcyclicityReport {
  std::vector<AcyclicityRow> rows;
  /// depth T_i >= i for every i.
  bool depth_condition;
  /// H_i = 0 or depth H_i = 0 for every i >= 1.
  bool homology_condition;
  /// H_i = 0 for every i >= 1.
  bool acyclic;
  std::vector<std::string> failures;

  bool hypotheses_hold() const noexcept { return depth_condition && homology_condition; }
};

/// Evaluates the acyclicity lemma on a bounded complex T_s -> ... -> T_0:
/// depth T_i >= i and (H_i = 0 or depth H_i = 0) for i > 0 force H_i = 0
/// for i > 0. Hypotheses holding with a nonzero H_i throws.
inline AcyclicityReport acyclicity_lemma_check(const ModuleComplex& T) {
  AcyclicityReport rep{{}, true, true, true, {}};
  std::optional<Depth> free_depth;
  auto term_depth = [&](std::size_t i) -> Depth {
    const ModuleMap& rel = T.relations(i);
    if (rel.rows() == 0) return {};
    if (rel.cols() != 0) return depth(T.term(i));
    if (!free_depth) free_depth = depth(PresentedModule::free(T.ring(), 1));
    return *free_depth;
  };
  for (std::size_t i = 0; i <= T.length(); ++i) {
    AcyclicityRow row{i, term_depth(i), true, {}};
    if (!row.term_depth.infinite() && *row.term_depth.value < i) {
      rep.depth_condition = false;
      rep.failures.push_back("depth T_" + std::to_string(i) + " = " + row.term_depth.to_string() + " < " +
                             std::to_string(i));
    }
    if (i >= 1) {
      Homology h = T.homology(static_cast<std::ptrdiff_t>(i));
      row.homology_zero = h.is_zero;
      if (!h.is_zero) {
        rep.acyclic = false;
        row.homology_depth = depth(h.module);
        if (*row.homology_depth.value != 0) {
          rep.homology_condition = false;
          rep.failures.push_back("H_" + std::to_string(i) + " is nonzero of depth " + row.homology_depth.to_string());
        }
      }
    }
    rep.rows.push_back(std::move(row));
  }
  if (rep.hypotheses_hold() && !rep.acyclic) {
    throw VerificationFailure("acyclicity lemma violated: hypotheses hold but the complex has higher homology");
  }
  return rep;
}

inline AcyclicityReport acyclicity_lemma_check(const FreeComplex& C) {
  return acyclicity_lemma_check(ModuleComplex::from_free(C));
}

}  // namespace frobforge
