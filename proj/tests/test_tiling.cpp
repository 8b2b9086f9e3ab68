#include <doctest.h>

#include "mvse/core/errors.hpp"
#include "mvse/core/linalg.hpp"
#include "mvse/tiling/tiling.hpp"
#include "oracles.hpp"

using namespace mvse;
using oracle::q;

namespace {

const Zonotope kSquare(2, {{1, 0}, {0, 1}});
const Zonotope kHexagon(2, {{1, 0}, {0, 1}, {1, 1}});
const Zonotope kOctagon(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}});
const Zonotope kCube(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

}  // namespace

TEST_CASE("lattice construction") {
  const auto l = Lattice::make(Matrix{{4, 2}, {2, 4}});
  CHECK(l.determinant() == 12);
  CHECK(l.dim() == 2);
  CHECK_THROWS_AS(Lattice::make(Matrix{{1, 2}, {2, 4}}), PreconditionError);
}

TEST_CASE("det_volume_check examples") {
  CHECK(det_volume_check(kSquare, Lattice::make(Matrix{{2, 0}, {0, 2}})));
  CHECK(det_volume_check(kCube, Lattice::make(Matrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})));
  CHECK(det_volume_check(kHexagon, Lattice::make(Matrix{{4, 2}, {2, 4}})));
  CHECK_FALSE(det_volume_check(kSquare, Lattice::make(Matrix{{3, 0}, {0, 3}})));
}

TEST_CASE("tile_verify examples") {
  const auto cube = tile_verify(kSquare, Lattice::make(Matrix{{2, 0}, {0, 2}}), 5, 500, 1);
  CHECK(cube.passed);
  CHECK(cube.samples_tested == 500);
  CHECK(tile_verify(kHexagon, Lattice::make(Matrix{{4, 2}, {2, 4}}), 6, 500, 1).passed);
  const auto sparse = tile_verify(kSquare, Lattice::make(Matrix{{3, 0}, {0, 3}}), 4, 500, 1);
  CHECK_FALSE(sparse.passed);
  REQUIRE(sparse.failure_point);
  CHECK(sparse.failure_count == 0);
  const auto dense = tile_verify(kSquare, Lattice::make(Matrix{{1, 0}, {0, 2}}), 4, 500, 1);
  CHECK_FALSE(dense.passed);
  CHECK(dense.failure_count >= 2);
  CHECK(tile_verify(kCube, Lattice::make(Matrix{{2, 1, 0}, {0, 2, 0}, {0, 0, 2}}), 4, 300, 3).passed);
}

TEST_CASE("tile_verify is seed-reproducible") {
  const auto l = Lattice::make(Matrix{{4, 2}, {2, 4}});
  const auto a = tile_verify(kHexagon, l, 6, 300, 17);
  const auto b = tile_verify(kHexagon, l, 6, 300, 17);
  const auto c = tile_verify(kHexagon, l, 6, 300, 18);
  CHECK(a.trace_digest == b.trace_digest);
  CHECK(a.passed == b.passed);
  CHECK(a.trace_digest != c.trace_digest);
}

TEST_CASE("lattice_search examples") {
  const auto sq = lattice_search(kSquare);
  REQUIRE(sq);
  CHECK(lattice_key(sq->basis()) == lattice_key(Matrix{{2, 0}, {0, 2}}));
  const auto hex = lattice_search(kHexagon);
  REQUIRE(hex);
  CHECK(hex->determinant() == 12);
  CHECK(lattice_key(hex->basis()) == lattice_key(Matrix{{4, 2}, {2, 4}}));
  SearchBudget small;
  small.samples = 200;
  CHECK_FALSE(lattice_search(kOctagon, small));
}

TEST_CASE("lattice_key identifies equal lattices") {
  CHECK(lattice_key(Matrix{{4, 2}, {2, 4}}) == lattice_key(Matrix{{2, 6}, {4, 6}}));
  CHECK(lattice_key(Matrix{{2, 0}, {0, 2}}) != lattice_key(Matrix{{2, 1}, {0, 2}}));
}

TEST_CASE("td_tiling_pipeline examples") {
  const auto hex = td_tiling_pipeline(kHexagon);
  CHECK(hex.member());
  CHECK(hex.tiles());
  CHECK(hex.det_volume_ok);
  const auto cube = td_tiling_pipeline(kCube);
  CHECK(cube.member());
  CHECK(cube.tiles());
  const auto oct = td_tiling_pipeline(kOctagon);
  CHECK_FALSE(oct.member());
  CHECK_FALSE(oct.lattice);
}

TEST_CASE("pipeline on a skewed hexagon") {
  const Matrix m{{2, 1}, {q(1, 2), 3}};
  const auto r = td_tiling_pipeline(linear_image(m, kHexagon));
  CHECK(r.member());
  CHECK(r.tiles());
  CHECK(r.det_volume_ok);
}
