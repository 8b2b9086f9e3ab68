#pragma once

#include <span>
#include <vector>

#include "mvse/core/matrix.hpp"
#include "mvse/zonotope/zonotope.hpp"

namespace mvse {

enum class HexagonKind { parallelogram, hexagon_affinely_regular, hexagon_other, not_hexagon };
const char* to_string(HexagonKind kind);

struct HexagonClassification {
  HexagonKind kind = HexagonKind::not_hexagon;
  std::vector<Vector> ordered_vertices;  ///< counterclockwise cycle
};

Rational cross2(std::span<const Rational> a, std::span<const Rational> b);

/// Strict convex hull (no collinear points) in counterclockwise order,
/// starting from the lexicographically smallest point.
std::vector<Vector> convex_hull2d(std::vector<Vector> points);

/// Signed area of a closed polygon; positive for counterclockwise order.
Rational shoelace_area(std::span<const Vector> cycle);

/// Vertices of { x in R^2 : |<r, x>| <= 1 for every row r }. The rows must
/// span R^2; zero rows are ignored.
std::vector<Vector> slab_polygon(const std::vector<Vector>& rows);

/// Classifies a centrally symmetric convex polygon given counterclockwise.
/// A hexagon is affinely regular iff some consecutive vertex triple
/// (a, b, c) satisfies b = a + c.
HexagonClassification classify_polygon(std::vector<Vector> ccw_vertices);

/// classify_polygon(vertices2d(canonicalize(z))) for d = 2.
HexagonClassification classify_hexagon(const Zonotope& z);

}  // namespace mvse
