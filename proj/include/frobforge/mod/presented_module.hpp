#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "frobforge/mod/module_map.hpp"

namespace frobforge {

/// Reduced Groebner basis of a submodule N + I R^rank of P^rank, plus the
/// staircase queries built on it.
class ModuleBasis {
 public:
  ModuleBasis() = default;
  ModuleBasis(const RingPtr& ring, std::size_t rank, const std::vector<gb::MVec>& gens)
      : rank_(rank), nvars_(ring->nvars()) {
    std::vector<gb::MVec> all = gens;
    for (std::size_t j = 0; j < rank; ++j) ring->append_relations(all, static_cast<std::uint32_t>(j));
    ctx_ = ring->context();
    basis_ = gb::groebner_basis(all, rank, ctx_);
  }

  const std::vector<gb::MVec>& elements() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return rank_; }

  bool contains(gb::MVec v) const {
    return gb::normal_form(std::move(v), gb::reducer_of(basis_), ctx_).empty();
  }

  gb::MVec reduce(gb::MVec v) const { return gb::normal_form(std::move(v), gb::reducer_of(basis_), ctx_); }

  /// The quotient P^rank / (N + I P^rank) is zero.
  bool quotient_is_zero() const {
    std::vector<bool> unit(rank_, false);
    for (const auto& g : basis_) {
      if (g.front().mon.is_one()) unit[g.front().pos] = true;
    }
    for (bool u : unit) {
      if (!u) return false;
    }
    return true;
  }

  /// F_p-dimension of the quotient by counting standard monomials, or nullopt
  /// when some position has a free direction (infinite length).
  std::optional<std::uint64_t> quotient_dimension(std::uint64_t limit = 50'000'000) const {
    std::uint64_t total = 0;
    for (std::uint32_t pos = 0; pos < rank_; ++pos) {
      std::vector<ExponentVector> leads;
      for (const auto& g : basis_) {
        if (g.front().pos == pos) leads.push_back(g.front().mon);
      }
      auto count = standard_monomials(leads, limit);
      if (!count) return std::nullopt;
      total += *count;
    }
    return total;
  }

 private:
  std::optional<std::uint64_t> standard_monomials(const std::vector<ExponentVector>& leads,
                                                  std::uint64_t limit) const {
    for (const auto& m : leads) {
      if (m.is_one()) return 0;
    }
    std::vector<std::uint64_t> bound(nvars_, 0);
    for (std::size_t v = 0; v < nvars_; ++v) {
      for (const auto& m : leads) {
        if (m.support_mask() == (1u << v) && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
      }
      if (bound[v] == 0) return std::nullopt;
    }
    std::uint64_t box = 1;
    for (auto b : bound) {
      box *= b;
      if (box > limit) throw ResourceError("staircase too large to enumerate");
    }
    std::uint64_t count = 0;
    ExponentVector cur(nvars_);
    // Odometer walk over the box, skipping monomials in the leading-term module.
    while (true) {
      bool standard = true;
      for (const auto& m : leads) {
        if (m.divides(cur)) {
          standard = false;
          break;
        }
      }
      if (standard) ++count;
      std::size_t v = 0;
      while (v < nvars_) {
        if (cur[v] + 1 < bound[v]) {
          cur.set(v, cur[v] + 1);
          break;
        }
        cur.set(v, 0);
        ++v;
      }
      if (v == nvars_) break;
    }
    return count;
  }

  std::size_t rank_ = 0;
  std::size_t nvars_ = 0;
  gb::Context ctx_{};
  std::vector<gb::MVec> basis_;
};

/// M = coker(presentation): generators are the rows, relations the columns.
/// Columns are reduced modulo I; zero and repeated columns are dropped.
class PresentedModule {
 public:
  PresentedModule() = default;
  explicit PresentedModule(ModuleMap presentation)
      : ring_(presentation.ring()), presentation_(presentation.pruned_columns()) {
    ring_->require_nonzero();
    basis_ = std::make_shared<const ModuleBasis>(ring_, presentation_.rows(), presentation_.columns());
  }

  static PresentedModule free(const RingPtr& ring, std::size_t rank) {
    return PresentedModule(ModuleMap(ring, rank, 0));
  }

  /// R / (gens)
  static PresentedModule cyclic(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    std::vector<std::vector<Polynomial>> row{gens};
    if (gens.empty()) return free(ring, 1);
    return PresentedModule(ModuleMap::from_rows(ring, row));
  }

  /// k = R / (x_1, ..., x_n)
  static PresentedModule residue_field(const RingPtr& ring) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
    return cyclic(ring, vars);
  }

  static PresentedModule zero(const RingPtr& ring) { return PresentedModule(ModuleMap(ring, 0, 0)); }

  const RingPtr& ring() const noexcept { return ring_; }
  const ModuleMap& presentation() const noexcept { return presentation_; }
  std::size_t num_generators() const noexcept { return presentation_.rows(); }
  const ModuleBasis& basis() const { return *basis_; }

  bool is_zero() const { return basis_->quotient_is_zero(); }

  /// dim_{F_p} M, or nullopt when M has infinite length.
  std::optional<std::uint64_t> kdim() const { return basis_->quotient_dimension(); }

  /// Does the vector (in generator coordinates) vanish in M?
  bool is_zero_element(const gb::MVec& v) const { return basis_->contains(v); }

  friend bool operator==(const PresentedModule& a, const PresentedModule& b) {
    return a.presentation_ == b.presentation_;
  }

 private:
  RingPtr ring_;
  ModuleMap presentation_;
  std::shared_ptr<const ModuleBasis> basis_;
};

/// kdim rendered for reports: finite value or "infinite".
struct KDim {
  std::optional<std::uint64_t> value;

  bool finite() const noexcept { return value.has_value(); }
  bool is_zero() const noexcept { return value && *value == 0; }
  friend bool operator==(const KDim&, const KDim&) = default;
};

}  // namespace frobforge
