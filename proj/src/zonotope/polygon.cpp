#include "mvse/zonotope/polygon.hpp"

#include <algorithm>

#include "mvse/core/errors.hpp"
#include "mvse/core/linalg.hpp"

namespace mvse {

const char* to_string(HexagonKind kind) {
  switch (kind) {
    case HexagonKind::parallelogram: return "parallelogram";
    case HexagonKind::hexagon_affinely_regular: return "hexagon_affinely_regular";
    case HexagonKind::hexagon_other: return "hexagon_other";
    case HexagonKind::not_hexagon: return "not_hexagon";
  }
  return "?";
}

Rational cross2(std::span<const Rational> a, std::span<const Rational> b) { return a[0] * b[1] - a[1] * b[0]; }

namespace {

Rational turn(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

std::vector<Vector> convex_hull2d(std::vector<Vector> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<Vector> hull(2 * points.size());
  Index k = 0;
  for (const auto& p : points) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const Index lower = k + 1;
  for (Index i = points.size() - 1; i-- > 0;) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

Rational shoelace_area(std::span<const Vector> cycle) {
  Rational twice = 0;
  for (Index i = 0; i < cycle.size(); ++i) twice += cross2(cycle[i], cycle[(i + 1) % cycle.size()]);
  return twice / 2;
}

std::vector<Vector> slab_polygon(const std::vector<Vector>& rows) {
  std::vector<Vector> lines;  // <n, x> = 1
  for (const auto& r : rows) {
    if (r.size() != 2) throw ShapeError("zonotope", "slab rows must be 2-vectors");
    if (is_zero(r)) continue;
    lines.push_back(r);
    lines.push_back(scaled(r, -1));
  }
  if (lines.empty() || rank(Matrix::from_rows(lines)) < 2) {
    throw PreconditionError("zonotope", "slabs do not bound a polygon (rows do not span R^2)");
  }
  std::vector<Vector> candidates;
  for (Index i = 0; i < lines.size(); ++i) {
    for (Index j = i + 1; j < lines.size(); ++j) {
      const Rational den = cross2(lines[i], lines[j]);
      if (den == 0) continue;
      // Cramer's rule for n_i.x = 1, n_j.x = 1.
      Vector x{(lines[j][1] - lines[i][1]) / den, (lines[i][0] - lines[j][0]) / den};
      bool feasible = true;
      for (const auto& n : lines) {
        if (dot(n, x) > 1) {
          feasible = false;
          break;
        }
      }
      if (feasible) candidates.push_back(std::move(x));
    }
  }
  return convex_hull2d(std::move(candidates));
}

HexagonClassification classify_polygon(std::vector<Vector> ccw_vertices) {
  HexagonClassification out;
  out.ordered_vertices = std::move(ccw_vertices);
  const auto& v = out.ordered_vertices;
  if (v.size() == 4) {
    out.kind = HexagonKind::parallelogram;
  } else if (v.size() == 6) {
    out.kind = v[1] == add(v[0], v[2]) ? HexagonKind::hexagon_affinely_regular : HexagonKind::hexagon_other;
  } else {
    out.kind = HexagonKind::not_hexagon;
  }
  return out;
}

HexagonClassification classify_hexagon(const Zonotope& z) {
  if (z.dim() != 2) throw PreconditionError("zonotope", "hexagon classification needs d = 2");
  return classify_polygon(vertices2d(canonicalize(z)));
}

}  // namespace mvse
