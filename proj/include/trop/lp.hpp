#pragma once

#include <optional>

#include "trop/numeric.hpp"

namespace trop {

// Exact feasibility test for { x >= 0 : A x = b } via phase-1 simplex with
// Bland's rule.  Returns a feasible point when one exists.
std::optional<RatVec> lp_feasible_point(const RatMat& a, const RatVec& b);

// Is p a convex combination of the given points?
bool in_convex_hull(const std::vector<IntVec>& points, const RatVec& p);

}  // namespace trop
