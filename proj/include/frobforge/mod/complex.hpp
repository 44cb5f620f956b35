#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobforge/mod/presented_module.hpp"

namespace frobforge {

/// Columns generating ker(A : R^cols -> R^rows). The module Groebner basis of
/// (A | Id) together with I e_j is computed over P with the top block
/// eliminated; the bottom parts of the surviving elements are the syzygies.
inline ModuleMap syzygy(const ModuleMap& A, const ModuleMap* target_relations = nullptr) {
  const auto& ring = A.ring();
  ring->require_nonzero();
  if (A.cols() == 0) return ModuleMap(ring, 0, 0);
  std::vector<gb::MVec> rels;
  for (std::size_t j = 0; j < A.rows(); ++j) ring->append_relations(rels, static_cast<std::uint32_t>(j));
  if (target_relations != nullptr) {
    for (auto& c : target_relations->columns()) rels.push_back(std::move(c));
  }
  auto syz = gb::syzygies(A.columns(), rels, A.rows(), ring->context());
  std::vector<gb::MVec> cols;
  for (auto& s : syz) {
    auto r = ring->reduce(std::move(s));
    if (!r.empty()) cols.push_back(std::move(r));
  }
  ModuleMap S = ModuleMap::from_columns(ring, A.cols(), cols).pruned_columns();
  if (target_relations == nullptr && !(A * S).is_zero()) {
    throw VerificationFailure("syzygy check failed: A*S is not zero modulo I");
  }
  return S;
}

/// Bounded chain complex of free modules F_L -> ... -> F_0 over R.
/// map(i) is the differential F_i -> F_{i-1}, 1 <= i <= length().
class FreeComplex {
 public:
  FreeComplex() = default;

  FreeComplex(RingPtr ring, std::size_t rank0, std::vector<ModuleMap> maps)
      : ring_(std::move(ring)), maps_(std::move(maps)) {
    ranks_.push_back(rank0);
    for (std::size_t i = 0; i < maps_.size(); ++i) {
      require_same_ring(ring_, maps_[i].ring());
      if (maps_[i].rows() != ranks_.back()) {
        throw StructuralError("differential " + std::to_string(i + 1) + " has " + std::to_string(maps_[i].rows()) +
                              " rows, expected " + std::to_string(ranks_.back()));
      }
      ranks_.push_back(maps_[i].cols());
    }
    for (std::size_t i = 1; i < maps_.size(); ++i) {
      if (!(maps_[i - 1] * maps_[i]).is_zero()) {
        throw StructuralError("d_" + std::to_string(i) + " * d_" + std::to_string(i + 1) + " is not zero modulo I");
      }
    }
  }

  /// Maps listed from the highest degree down, as in the DSL.
  static FreeComplex from_maps_descending(RingPtr ring, std::vector<ModuleMap> maps_high_to_low) {
    if (maps_high_to_low.empty()) throw StructuralError("complex needs at least one map");
    std::vector<ModuleMap> maps(maps_high_to_low.rbegin(), maps_high_to_low.rend());
    std::size_t r0 = maps.front().rows();
    return FreeComplex(std::move(ring), r0, std::move(maps));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t length() const noexcept { return maps_.size(); }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  std::size_t rank(std::ptrdiff_t i) const noexcept {
    return (i < 0 || static_cast<std::size_t>(i) >= ranks_.size()) ? 0 : ranks_[static_cast<std::size_t>(i)];
  }
  const ModuleMap& map(std::size_t i) const { return maps_.at(i - 1); }
  const std::vector<ModuleMap>& maps() const noexcept { return maps_; }

  bool all_entries_in_maximal_ideal() const {
    for (const auto& m : maps_) {
      if (!m.entries_in_maximal_ideal()) return false;
    }
    return true;
  }

  friend bool operator==(const FreeComplex& a, const FreeComplex& b) {
    return a.ranks_ == b.ranks_ && a.maps_ == b.maps_;
  }

 private:
  RingPtr ring_;
  std::vector<std::size_t> ranks_;
  std::vector<ModuleMap> maps_;
};

struct Homology {
  PresentedModule module;
  bool is_zero;
  /// Kernel generators in the coordinates of the ambient term.
  ModuleMap cycles;
};

/// ker(out) / (im(in) + relations) inside R^rank, where `out` maps to
/// R^b / out_relations. Null pointers stand for the zero map.
inline Homology subquotient(const RingPtr& ring, std::size_t rank, const ModuleMap* out,
                            const ModuleMap* out_relations, const ModuleMap* in, const ModuleMap* relations) {
  if (rank == 0) return {PresentedModule::zero(ring), true, ModuleMap(ring, 0, 0)};
  ModuleMap K = (out == nullptr || out->rows() == 0) ? ModuleMap::identity(ring, rank)
                                                     : syzygy(hconcat(*out, out_relations ? *out_relations
                                                                                         : ModuleMap(ring, out->rows(), 0)))
                                                           .top_rows(rank)
                                                           .pruned_columns();
  if (K.cols() == 0) return {PresentedModule::zero(ring), true, K};
  ModuleMap B = K;
  if (in != nullptr) B = hconcat(B, *in);
  if (relations != nullptr) B = hconcat(B, *relations);
  ModuleMap Q = syzygy(B).top_rows(K.cols());
  PresentedModule H(Q);
  bool zero = H.is_zero();
  return {std::move(H), zero, std::move(K)};
}

/// H_i(C) = ker d_i / im d_{i+1}; zero module outside the complex.
inline Homology homology(const FreeComplex& C, std::ptrdiff_t i) {
  const auto& ring = C.ring();
  if (i < 0 || static_cast<std::size_t>(i) > C.length()) return {PresentedModule::zero(ring), true, ModuleMap(ring, 0, 0)};
  std::size_t k = static_cast<std::size_t>(i);
  const ModuleMap* out = k >= 1 ? &C.map(k) : nullptr;
  const ModuleMap* in = k + 1 <= C.length() ? &C.map(k + 1) : nullptr;
  return subquotient(ring, C.rank(i), out, nullptr, in, nullptr);
}

/// Bounded complex of finitely presented modules. Term i is
/// R^{ranks[i]} / im(relations[i]); maps are lifts to the generators.
class ModuleComplex {
 public:
  ModuleComplex() = default;

  ModuleComplex(RingPtr ring, std::vector<ModuleMap> relations, std::vector<ModuleMap> maps)
      : ring_(std::move(ring)), relations_(std::move(relations)), maps_(std::move(maps)) {
    if (maps_.size() + 1 != relations_.size()) throw StructuralError("module complex needs one more term than maps");
    for (std::size_t i = 0; i < maps_.size(); ++i) {
      if (maps_[i].rows() != relations_[i].rows() || maps_[i].cols() != relations_[i + 1].rows()) {
        throw StructuralError("map " + std::to_string(i + 1) + " does not fit its terms");
      }
    }
  }

  static ModuleComplex from_free(const FreeComplex& C) {
    std::vector<ModuleMap> rels;
    for (std::size_t i = 0; i <= C.length(); ++i) rels.emplace_back(C.ring(), C.rank(static_cast<std::ptrdiff_t>(i)), 0);
    return ModuleComplex(C.ring(), std::move(rels), C.maps());
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t length() const noexcept { return maps_.size(); }
  const ModuleMap& relations(std::size_t i) const { return relations_.at(i); }
  const ModuleMap& map(std::size_t i) const { return maps_.at(i - 1); }
  PresentedModule term(std::size_t i) const { return PresentedModule(relations_.at(i)); }

  Homology homology(std::ptrdiff_t i) const {
    if (i < 0 || static_cast<std::size_t>(i) > length()) return {PresentedModule::zero(ring_), true, ModuleMap(ring_, 0, 0)};
    std::size_t k = static_cast<std::size_t>(i);
    const ModuleMap* out = k >= 1 ? &map(k) : nullptr;
    const ModuleMap* out_rel = k >= 1 ? &relations_[k - 1] : nullptr;
    const ModuleMap* in = k + 1 <= length() ? &map(k + 1) : nullptr;
    return subquotient(ring_, relations_[k].rows(), out, out_rel, in, &relations_[k]);
  }

 private:
  RingPtr ring_;
  std::vector<ModuleMap> relations_;
  std::vector<ModuleMap> maps_;
};

/// C (x)_R N for a free complex C and N = coker(Q).
inline ModuleComplex tensor(const FreeComplex& C, const PresentedModule& N) {
  require_same_ring(C.ring(), N.ring());
  const std::size_t s = N.num_generators();
  const ModuleMap& Q = N.presentation();
  std::vector<ModuleMap> rels, maps;
  for (std::size_t i = 0; i <= C.length(); ++i) rels.push_back(Q.block_diagonal(C.rank(static_cast<std::ptrdiff_t>(i))));
  for (std::size_t i = 1; i <= C.length(); ++i) maps.push_back(C.map(i).kron_identity(s));
  return ModuleComplex(C.ring(), std::move(rels), std::move(maps));
}

}  // namespace frobforge
