#pragma once

#include <algorithm>
#include <vector>

#include "frobforge/mod/complex.hpp"

namespace frobforge {

namespace detail {

// Subsets of {0..s-1} of size i, lexicographic.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t s, std::size_t i) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == i) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = start; v < s; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

/// K(z_1..z_s): K_i has basis e_J for |J| = i (lexicographic), and
/// d(e_J) = sum_k (-1)^k z_{j_k} e_{J - j_k} with k counted from 0.
inline FreeComplex koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& z) {
  const std::size_t s = z.size();
  std::vector<ModuleMap> maps;
  for (std::size_t i = 1; i <= s; ++i) {
    auto rows = detail::subsets(s, i - 1);
    auto cols = detail::subsets(s, i);
    ModuleMap d(ring, rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (std::size_t k = 0; k < i; ++k) {
        std::vector<std::size_t> face = cols[c];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        auto r = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), face) - rows.begin());
        const Polynomial& zk = z[cols[c][k]];
        d.set(r, c, k % 2 == 0 ? zk : -zk);
      }
    }
    maps.push_back(std::move(d));
  }
  return FreeComplex(ring, 1, std::move(maps));
}

/// Koszul complex on the variables, whose images generate m.
inline FreeComplex koszul_on_variables(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
  return koszul_complex(ring, vars);
}

}  // namespace frobforge
