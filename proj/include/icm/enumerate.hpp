#pragma once

#include "icm/monomial_ideal.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace icm {

/// Visits every monomial ideal whose minimal generators lie in the box
/// [0, box], each exactly once. When `floor` is given only ideals containing
/// it are visited. The unit ideal is skipped unless `include_unit` is set.
///
/// An ideal with generators in the box is determined by its trace on the
/// box, which is an up-set of the box; the enumeration walks those up-sets.
/// Throws BudgetExceeded when the box has more than `max_box_points` points.
void for_each_ideal_in_box(const ExponentVector& box, const std::optional<MonomialIdeal>& floor,
                           bool include_unit,
                           const std::function<void(const MonomialIdeal&)>& visit,
                           std::size_t max_box_points = 1u << 16);

/// All integrally closed ideals with generators in [0, box] (unit included),
/// in ascending order.
std::vector<MonomialIdeal> integrally_closed_ideals_in_box(const ExponentVector& box);

}  // namespace icm
