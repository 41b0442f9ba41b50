#pragma once

#include "icm/types.hpp"

#include <span>

namespace icm::detail {

enum class Fit {
  Dominated,  // sum λ_i p_i <= q componentwise
  Exact,      // sum λ_i p_i == q
};

/// Decides whether there are rationals λ_i >= 0 with sum λ_i = 1 such that
/// the combination of `points` fits `target` in the given sense. Exact
/// phase-one simplex with Bland's rule.
bool convex_combination_feasible(std::span<const LatticePoint> points,
                                 std::span<const Rational> target, Fit fit);

}  // namespace icm::detail
