#pragma once

#include <optional>
#include <vector>

#include "frobforge/mod/complex.hpp"

namespace frobforge {

namespace detail {

struct Pivot {
  std::size_t row, col;
  bool constant;
};

// First unit entry: nonzero constants before other local units (nonzero
// constant term), each scanned by lowest row, then lowest column.
inline std::optional<Pivot> find_pivot(const ModuleMap& d) {
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) {
      const auto& e = d.at(r, c);
      if (!e.is_zero() && e.is_constant()) return Pivot{r, c, true};
    }
  }
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (d.at(r, c).constant_coeff() != 0) return Pivot{r, c, false};
    }
  }
  return std::nullopt;
}

// Cancels the summand R e_c -> R e_r of d_i (maps[i-1]). With a constant
// pivot u the new differential is D - a u^{-1} b; with a non-constant local
// unit it is u D - a b, which differs from the former by the unit u in R_m.
inline void cancel_pivot(std::vector<ModuleMap>& maps, std::size_t i, const Pivot& pv) {
  ModuleMap& d = maps[i - 1];
  const auto& ring = d.ring();
  const Polynomial u = d.at(pv.row, pv.col);
  ModuleMap nd(ring, d.rows() - 1, d.cols() - 1);
  Coeff uinv = pv.constant ? ring->field().inv(u.leading_term().coef) : 0;
  for (std::size_t c = 0, oc = 0; c < d.cols(); ++c) {
    if (c == pv.col) continue;
    const Polynomial& b = d.at(pv.row, c);
    for (std::size_t r = 0, orow = 0; r < d.rows(); ++r) {
      if (r == pv.row) continue;
      const Polynomial& a = d.at(r, pv.col);
      Polynomial entry = pv.constant ? d.at(r, c) : u * d.at(r, c);
      if (!a.is_zero() && !b.is_zero()) {
        entry = pv.constant ? entry - (a * b).scaled(uinv) : entry - a * b;
        nd.set(orow, oc, entry);
      } else if (pv.constant) {
        nd.at_mut(orow, oc) = entry;
      } else {
        nd.set(orow, oc, entry);
      }
      ++orow;
    }
    ++oc;
  }
  d = std::move(nd);
  if (i >= 2) maps[i - 2] = maps[i - 2].without_column(pv.row);
  if (i < maps.size()) maps[i] = maps[i].without_row(pv.col);
}

inline void eliminate_units(std::vector<ModuleMap>& maps, std::size_t i) {
  while (auto pv = find_pivot(maps[i - 1])) cancel_pivot(maps, i, *pv);
}

}  // namespace detail

/// Cancels every unit entry, lowest degree first, so that all differentials
/// land in m F_{i-1}. The result is homotopy equivalent to C after
/// localizing at m.
inline FreeComplex minimalize(const FreeComplex& C) {
  std::vector<ModuleMap> maps = C.maps();
  std::size_t rank0 = C.rank(0);
  for (std::size_t i = 1; i <= maps.size(); ++i) {
    detail::eliminate_units(maps, i);
    if (i == 1) rank0 = maps[0].rows();
  }
  return FreeComplex(C.ring(), rank0, std::move(maps));
}

struct Resolution {
  FreeComplex complex;
  /// The resolution continues past the returned length.
  bool truncated;

  std::vector<std::size_t> betti() const { return complex.ranks(); }
};

/// Minimal free resolution F_max_len -> ... -> F_0 of M, built by iterated
/// syzygies; each new differential has its unit entries cancelled, which
/// makes the previous term minimal. Trailing zero terms are dropped.
inline Resolution free_resolution(const PresentedModule& M, std::size_t max_len) {
  const auto& ring = M.ring();
  std::vector<ModuleMap> maps{M.presentation()};
  detail::eliminate_units(maps, 1);
  for (std::size_t i = 1; i <= max_len; ++i) {
    if (maps[i - 1].cols() == 0) break;
    maps.push_back(syzygy(maps[i - 1]));
    detail::eliminate_units(maps, i + 1);
  }
  std::size_t rank0 = maps[0].rows();
  bool truncated = maps.size() > max_len && maps[max_len].cols() > 0;
  if (maps.size() > max_len) maps.resize(max_len);
  while (!maps.empty() && maps.back().cols() == 0) maps.pop_back();
  return {FreeComplex(ring, rank0, std::move(maps)), truncated};
}

}  // namespace frobforge
