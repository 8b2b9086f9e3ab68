#include <doctest.h>

#include "mvse/core/errors.hpp"
#include "mvse/core/random.hpp"
#include "mvse/zonotope/polygon.hpp"
#include "mvse/zonotope/zonotope.hpp"
#include "oracles.hpp"

using namespace mvse;
using oracle::q;

namespace {

Zonotope z2(std::vector<Vector> g) { return Zonotope(2, std::move(g)); }

const Zonotope kSquare = Zonotope(2, {{1, 0}, {0, 1}});
const Zonotope kHexagon = Zonotope(2, {{1, 0}, {0, 1}, {1, 1}});

Zonotope random_zonogon(Rng& rng, Index n) {
  std::vector<Vector> g;
  for (Index k = 0; k < n; ++k) g.push_back(rng.rational_vector(2, 5, 3));
  return z2(g);
}

}  // namespace

TEST_CASE("construction validates dimensions") {
  CHECK_THROWS_AS(Zonotope(2, {{1, 0, 0}}), ShapeError);
  const auto z = Zonotope::from_columns(Matrix{{1, 0, 1}, {0, 1, 1}});
  CHECK(z.size() == 3);
  CHECK(z.generator(2) == Vector{1, 1});
}

TEST_CASE("canonicalize examples") {
  const auto z = canonicalize(z2({{q(1, 2), q(-1, 2)}, {q(-1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}}));
  REQUIRE(z.size() == 2);
  CHECK(z.generator(0) == Vector{1, -1});
  CHECK(z.generator(1) == Vector{q(1, 2), q(1, 2)});
  CHECK(canonicalize(z2({{1, 0}})).generators() == std::vector<Vector>{{1, 0}});
  CHECK(canonicalize(z2({{1, 0}, {0, 0}})).generators() == std::vector<Vector>{{1, 0}});
  CHECK(canonicalize(z2({{-2, 0}, {1, 0}})).generators() == std::vector<Vector>{{3, 0}});
}

TEST_CASE("canonicalize preserves the support function") {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    auto g = random_zonogon(rng, 4).generators();
    g.push_back(scaled(g[0], q(-3, 2)));
    g.push_back(scaled(g[1], 2));
    const Zonotope z = z2(g);
    const Zonotope c = canonicalize(z);
    CHECK(c.size() <= 4);
    for (int k = 0; k < 10; ++k) {
      const Vector x = rng.rational_vector(2, 5, 3);
      CHECK(support(c, x) == support(z, x));
    }
  }
}

TEST_CASE("support matches vertex enumeration") {
  CHECK(support(kHexagon, Vector{1, 0}) == 2);
  CHECK(support(kHexagon, Vector{0, 0}) == 0);
  Rng rng(22);
  for (int i = 0; i < 30; ++i) {
    const Index d = rng.uniform(2, 3);
    std::vector<Vector> g;
    for (Index k = 0; k < 4; ++k) g.push_back(rng.rational_vector(d, 4, 3));
    const Zonotope z(d, g);
    const Vector x = rng.rational_vector(d, 4, 3);
    CHECK(support(z, x) == oracle::vertex_support(z, x));
  }
}

TEST_CASE("volume examples") {
  CHECK(volume(kSquare) == 4);
  CHECK(volume(Zonotope(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 8);
  CHECK(volume(kHexagon) == 12);
  CHECK(volume(scaled(kHexagon, q(1, 2))) == 3);
  CHECK_THROWS_AS(volume(z2({{1, 0}, {2, 0}})), PreconditionError);
}

TEST_CASE("volume equals the area of the brute-force hull") {
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    const Zonotope z = random_zonogon(rng, rng.uniform(2, 5));
    if (rank(z) < 2) continue;
    CHECK(volume(z) == oracle::polygon_area(oracle::jarvis_hull(oracle::sign_sums(z))));
  }
}

TEST_CASE("vertices2d examples and oracle") {
  const std::vector<Vector> hex{{2, 2}, {0, 2}, {-2, 0}, {-2, -2}, {0, -2}, {2, 0}};
  CHECK(vertices2d(kHexagon) == hex);
  const auto sq = vertices2d(kSquare);
  CHECK(sq.size() == 4);
  for (const auto& v : sq) CHECK((abs(v[0]) == 1 && abs(v[1]) == 1));

  Rng rng(24);
  for (int i = 0; i < 40; ++i) {
    const Zonotope z = random_zonogon(rng, rng.uniform(2, 5));
    if (rank(z) < 2) continue;
    auto mine = vertices2d(z);
    auto ref = oracle::jarvis_hull(oracle::sign_sums(z));
    CHECK(shoelace_area(mine) > 0);
    std::sort(mine.begin(), mine.end());
    std::sort(ref.begin(), ref.end());
    CHECK(mine == ref);
  }
}

TEST_CASE("hrep facet counts and offsets") {
  const auto sq = hrep(kSquare);
  CHECK(sq.size() == 4);
  for (const auto& f : sq) CHECK(f.offset == 1);
  CHECK(hrep(kHexagon).size() == 6);
  const auto cube = hrep(Zonotope(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(cube.size() == 6);
  const auto rhombic = hrep(Zonotope(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
  CHECK(rhombic.size() == 12);
}

TEST_CASE("contains examples") {
  CHECK(contains(kHexagon, Vector{0, 0}) == Location::interior);
  CHECK(contains(kHexagon, Vector{2, 2}) == Location::boundary);
  CHECK(contains(kHexagon, Vector{4, 4}) == Location::outside);
  CHECK(contains(kHexagon, Vector{1, 2}) == Location::boundary);
  CHECK(contains(kHexagon, Vector{2, -1}) == Location::outside);
}

TEST_CASE("contains agrees with support inequalities in 3D") {
  const Zonotope z(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  Rng rng(25);
  const auto facets = hrep(z);
  for (int i = 0; i < 200; ++i) {
    const Vector p = rng.rational_vector(3, 9, 2);
    bool outside = false, on = false;
    for (const auto& f : facets) {
      const Rational v = dot(f.normal, p);
      if (v > f.offset) outside = true;
      if (v == f.offset) on = true;
    }
    const Location want = outside ? Location::outside : on ? Location::boundary : Location::interior;
    CHECK(contains(z, p) == want);
  }
}

TEST_CASE("is_parallelepiped") {
  CHECK(is_parallelepiped(kSquare));
  CHECK_FALSE(is_parallelepiped(kHexagon));
  CHECK(is_parallelepiped(z2({{1, 0}, {2, 0}, {0, 1}})));
}

TEST_CASE("classify examples") {
  const auto reg = classify_polygon({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
  CHECK(reg.kind == HexagonKind::hexagon_affinely_regular);
  CHECK(classify_hexagon(z2({{1, 0}, {0, 1}, {q(1, 2), q(1, 2)}})).kind == HexagonKind::hexagon_other);
  CHECK(classify_hexagon(kSquare).kind == HexagonKind::parallelogram);
  CHECK(classify_hexagon(kHexagon).kind == HexagonKind::hexagon_affinely_regular);
  CHECK(classify_hexagon(z2({{1, 0}, {0, 1}, {1, 1}, {1, -1}})).kind == HexagonKind::not_hexagon);
}

TEST_CASE("classification is invariant under linear maps") {
  Rng rng(26);
  for (int i = 0; i < 30; ++i) {
    const Matrix m = rng.rational_matrix(2, 2, 5, 3);
    if (m(0, 0) * m(1, 1) == m(0, 1) * m(1, 0)) continue;
    CHECK(classify_hexagon(linear_image(m, kHexagon)).kind == HexagonKind::hexagon_affinely_regular);
    CHECK(classify_hexagon(linear_image(m, kSquare)).kind == HexagonKind::parallelogram);
  }
}

TEST_CASE("slab polygon of the max(|a|,|b|,|a+b|) norm") {
  const auto verts = slab_polygon({{1, 0}, {0, 1}, {1, 1}});
  CHECK(verts.size() == 6);
  CHECK(shoelace_area(verts) == 3);
  CHECK(classify_polygon(verts).kind == HexagonKind::hexagon_affinely_regular);
}

TEST_CASE("minkowski sum and scaling") {
  const auto s = minkowski_sum(kSquare, z2({{1, 1}}));
  CHECK(volume(s) == volume(kHexagon));
  CHECK(volume(scaled(kHexagon, 3)) == 9 * volume(kHexagon));
  CHECK(cross(Vector{1, 0, 0}, Vector{0, 1, 0}) == Vector{0, 0, 1});
}
