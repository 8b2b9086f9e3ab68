#pragma once

#include <cstdint>

#include "mvse/core/matrix.hpp"
#include "mvse/zonotope/zonotope.hpp"

namespace mvse {

/// Product bound sup(h1/h2) * sup(h2/h1) on the Banach-Mazur distance
/// between two zonotopes at their given position (no optimisation over
/// linear maps).
struct BMBound {
  Rational upper_bound;       ///< max_ratio / min_ratio, >= 1
  Rational max_ratio;         ///< max of h1/h2 over evaluated directions
  Rational min_ratio;         ///< min of h1/h2 over evaluated directions
  Vector max_ratio_direction;
  Vector min_ratio_direction;
  std::size_t directions = 0;
  /// True when the evaluated directions provably contain the extremes.
  bool exact = false;
};

/// Evaluates h1/h2 at every direction orthogonal to d - 1 independent
/// generators of Z1 + Z2 (in d = 2: the breakpoints of both support
/// functions). Both support functions are linear on the cones cut out by these
/// rays, so the extremes of the ratio sit on them and the bound is exact. For
/// d >= 3 another `samples` seeded directions are evaluated as a cross-check.
BMBound bm_upper_bound(const Zonotope& z1, const Zonotope& z2, std::uint64_t seed = 1, std::size_t samples = 256);

}  // namespace mvse
