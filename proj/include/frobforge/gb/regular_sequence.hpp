#pragma once

#include <optional>
#include <vector>

#include "frobforge/mod/quotient_ring.hpp"

namespace frobforge {

struct RegularSequenceResult {
  bool regular;
  /// 1-based index of the first element that is a zero divisor (or makes the
  /// quotient vanish) modulo the earlier ones.
  std::optional<std::size_t> failing_index;
};

/// Checks x_1, ..., x_s for being an R-regular sequence in m:
/// (J_{i-1} : x_i) = J_{i-1} and 1 not in J_i, where J_i = I + (x_1..x_i).
inline RegularSequenceResult is_regular_sequence(const std::vector<Polynomial>& elements, const QuotientRing& R) {
  R.require_nonzero();
  for (const auto& x : elements) {
    if (x.ring()->nvars() != R.nvars()) throw StructuralError("element lives in a different polynomial ring");
    if (x.constant_coeff() != 0) throw DomainError("regular sequence element " + x.to_string() + " is not in m");
  }
  Ideal J = R.ideal();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Polynomial& x = elements[i];
    auto GJ = buchberger(J);
    if (x.is_zero() || ideal_contains(GJ, x)) return {false, i + 1};
    if (!(buchberger(colon_ideal(J, x)) == GJ)) return {false, i + 1};
    J = J + Ideal(R.base(), {x});
    if (buchberger(J).contains_one()) return {false, i + 1};
  }
  return {true, std::nullopt};
}

}  // namespace frobforge
