#pragma once

#include <string>
#include <vector>

#include "frobforge/mod/resolution.hpp"

namespace frobforge {

/// A homology module together with its vanishing flag and F_p-dimension.
struct DerivedValue {
  PresentedModule module;
  bool is_zero;
  KDim kdim;
};

inline DerivedValue evaluate(Homology h) {
  KDim d{h.is_zero ? std::optional<std::uint64_t>(0) : h.module.kdim()};
  return {std::move(h.module), h.is_zero, d};
}

/// Tor_i(M, N) for 0 <= i <= max_i: minimal resolution of M to max_i + 1,
/// tensored with N, then homology.
inline std::vector<DerivedValue> tor_table(const PresentedModule& M, const PresentedModule& N, std::size_t max_i) {
  require_same_ring(M.ring(), N.ring());
  auto res = free_resolution(M, max_i + 1);
  ModuleComplex T = tensor(res.complex, N);
  std::vector<DerivedValue> out;
  for (std::size_t i = 0; i <= max_i; ++i) out.push_back(evaluate(T.homology(static_cast<std::ptrdiff_t>(i))));
  return out;
}

inline DerivedValue tor(const PresentedModule& M, const PresentedModule& N, std::size_t i) {
  return std::move(tor_table(M, N, i).back());
}

/// Ext^i(N, M) for 0 <= i <= max_i as the cohomology of Hom(F, M), F a
/// minimal resolution of N. Hom(R^a, M) = M^a and the coboundary is the
/// transpose of the differential acting blockwise.
inline std::vector<DerivedValue> ext_table(const PresentedModule& N, const PresentedModule& M, std::size_t max_i) {
  require_same_ring(M.ring(), N.ring());
  const auto& ring = M.ring();
  auto res = free_resolution(N, max_i + 1);
  const FreeComplex& F = res.complex;
  const std::size_t s = M.num_generators();
  const ModuleMap& Q = M.presentation();
  std::vector<DerivedValue> out;
  for (std::size_t i = 0; i <= max_i; ++i) {
    std::size_t rank = F.rank(static_cast<std::ptrdiff_t>(i)) * s;
    std::optional<ModuleMap> delta_out, delta_in;
    if (i + 1 <= F.length()) delta_out = F.map(i + 1).transpose().kron_identity(s);
    if (i >= 1 && i <= F.length()) delta_in = F.map(i).transpose().kron_identity(s);
    ModuleMap rel_out = Q.block_diagonal(F.rank(static_cast<std::ptrdiff_t>(i + 1)));
    ModuleMap rel = Q.block_diagonal(F.rank(static_cast<std::ptrdiff_t>(i)));
    out.push_back(evaluate(subquotient(ring, rank, delta_out ? &*delta_out : nullptr, &rel_out,
                                       delta_in ? &*delta_in : nullptr, &rel)));
  }
  return out;
}

inline DerivedValue ext(const PresentedModule& N, const PresentedModule& M, std::size_t i) {
  return std::move(ext_table(N, M, i).back());
}

inline DerivedValue hom(const PresentedModule& N, const PresentedModule& M) { return ext(N, M, 0); }

struct BettiTable {
  std::vector<std::size_t> betti;  // index i -> beta_i, 0 <= i <= max_i

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// beta_i two ways: ranks of the minimal resolution of M, and dim Tor_i(k, M)
/// with k resolved instead. Disagreement is an internal error.
inline BettiTable betti(const PresentedModule& M, std::size_t max_i) {
  auto res = free_resolution(M, max_i);
  BettiTable t;
  for (std::size_t i = 0; i <= max_i; ++i) t.betti.push_back(res.complex.rank(static_cast<std::ptrdiff_t>(i)));
  auto tors = tor_table(PresentedModule::residue_field(M.ring()), M, max_i);
  for (std::size_t i = 0; i <= max_i; ++i) {
    if (!tors[i].kdim.finite() || *tors[i].kdim.value != t.betti[i]) {
      throw VerificationFailure("Betti number " + std::to_string(i) + ": resolution rank " +
                                std::to_string(t.betti[i]) + " disagrees with dim Tor_i(k, M)");
    }
  }
  return t;
}

}  // namespace frobforge
