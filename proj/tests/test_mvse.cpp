#include <doctest.h>

#include "mvse/core/errors.hpp"
#include "mvse/core/linalg.hpp"
#include "mvse/core/random.hpp"
#include "mvse/mvse/hexagon.hpp"
#include "mvse/mvse/space.hpp"
#include "oracles.hpp"

using namespace mvse;
using oracle::q;

namespace {

const Matrix kY3{{1, 0}, {0, 1}, {1, 1}};
const Matrix kY4{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};

Matrix simplex(const Vector& t) {
  const Index d = t.size();
  Matrix a(d, d + 1);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) a(i, j) = Rational(i == j ? 1 : 0) - t[i];
    a(i, d) = t[i];
  }
  return a;
}

}  // namespace

TEST_CASE("make_space examples") {
  CHECK(PolyhedralSpace::make(Matrix::identity(3)).minors().values == std::vector<Rational>{1});
  CHECK(PolyhedralSpace::make(kY3).minors().values == std::vector<Rational>{1, 1, -1});
  CHECK(PolyhedralSpace::make(kY4).minors().values == std::vector<Rational>{1, 1, -1, 1});
  CHECK_THROWS_AS(PolyhedralSpace::make(Matrix{{1, 2}, {2, 4}}), PreconditionError);
}

TEST_CASE("normalize_laa") {
  const auto s = PolyhedralSpace::make(kY3);
  CHECK(normalize_laa(s).basis() == kY3);
  CHECK(normalize_laa(PolyhedralSpace::make(Matrix::identity(3))).basis() == Matrix::identity(3));
  Matrix doubled = kY3;
  for (Index r = 0; r < 3; ++r) doubled(r, 0) *= 2;
  const auto n = normalize_laa(PolyhedralSpace::make(doubled));
  CHECK(n.minors().max_abs() == 1);

  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const auto sp = PolyhedralSpace::make(rng.rational_matrix(5, 2, 5, 3));
    const auto nn = normalize_laa(sp);
    CHECK(nn.minors().max_abs() == 1);
    CHECK(rank(nn.basis().hconcat(sp.basis())) == 2);
  }
}

TEST_CASE("make_projection examples") {
  const auto s3 = PolyhedralSpace::make(kY3);
  const auto p = Projection::make(s3, simplex({q(1, 3), q(1, 3)}));
  CHECK(p.coeffs().columns() == std::vector<Vector>{{q(2, 3), q(-1, 3)}, {q(-1, 3), q(2, 3)}, {q(1, 3), q(1, 3)}});
  CHECK(p.image().size() == 3);
  CHECK(classify_hexagon(p.image()).kind == HexagonKind::hexagon_affinely_regular);
  const auto sq = Projection::make(s3, Matrix{{1, 0, 0}, {0, 1, 0}});
  CHECK(is_parallelepiped(sq.image()));
  CHECK_THROWS_AS(Projection::make(s3, Matrix{{1, 0, 1}, {0, 1, 0}}), PreconditionError);
  const auto id = PolyhedralSpace::make(Matrix::identity(2));
  CHECK(volume(Projection::make(id, Matrix::identity(2)).image()) == 4);
}

TEST_CASE("volume_ratio examples") {
  const auto id = PolyhedralSpace::make(Matrix::identity(3));
  CHECK(volume_ratio(id, Projection::make(id, Matrix::identity(3))) == 1);
  const auto s3 = PolyhedralSpace::make(kY3);
  CHECK(volume_ratio(s3, Projection::make(s3, Matrix{{0, -1, 1}, {-1, 0, 1}})) == 3);
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; a + b <= 6; ++b) {
      const Vector t{q(a, 6), q(b, 6)};
      const auto p = Projection::make(s3, simplex(t));
      CHECK(p.minors().values == std::vector<Rational>{1 - t[0] - t[1], t[1], -t[0]});
      CHECK(volume_ratio(s3, p) == 1);
    }
}

TEST_CASE("volume_ratio equals the image volume over the MVSE volume") {
  Rng rng(42);
  for (const Matrix& y : {kY3, kY4}) {
    const auto s = PolyhedralSpace::make(y);
    for (std::uint64_t k = 0; k < 50; ++k) {
      const auto p = random_projection(s, k + 1);
      CHECK(p.coeffs() * y == Matrix::identity(y.cols()));
      const Rational r = volume_ratio(s, p);
      CHECK(r >= 1);
      CHECK(r == volume(p.image()) / mvse_volume(s));
    }
  }
}

TEST_CASE("volume_ratio is invariant under change of basis") {
  Rng rng(43);
  const auto s = PolyhedralSpace::make(kY4);
  for (std::uint64_t k = 0; k < 20; ++k) {
    const Matrix c = rng.rational_matrix(3, 3, 4, 3);
    if (det(c) == 0) continue;
    const auto p = random_projection(s, k + 7);
    const auto s2 = PolyhedralSpace::make(kY4 * c);
    const auto p2 = Projection::make(s2, inverse(c) * p.coeffs());
    CHECK(volume_ratio(s2, p2) == volume_ratio(s, p));
  }
}

TEST_CASE("mvse_volume") {
  CHECK(mvse_volume(PolyhedralSpace::make(Matrix::identity(3))) == 8);
  CHECK(mvse_volume(PolyhedralSpace::make(kY3)) == 4);
  CHECK(mvse_volume(PolyhedralSpace::make(kY4)) == 8);
}

TEST_CASE("coordinate projections") {
  const auto s3 = PolyhedralSpace::make(kY3);
  const auto p12 = coordinate_projection(s3, {0, 1});
  CHECK(volume_ratio(s3, p12) == 1);
  CHECK(is_parallelepiped(p12.image()));
  CHECK(p12.minors().values == std::vector<Rational>{1, 0, 0});
  const auto p23 = coordinate_projection(s3, {1, 2});
  CHECK(p23.coeffs() == Matrix{{0, -1, 1}, {0, 1, 0}});
  CHECK(p23.minors().values[2] == -1);
  CHECK(volume_ratio(s3, p23) == 1);
  const auto s4 = PolyhedralSpace::make(kY4);
  const auto p4 = coordinate_projection(s4, {0, 1, 2});
  CHECK(volume_ratio(s4, p4) == 1);
  CHECK(volume(p4.image()) == 8);
  CHECK_THROWS_AS(coordinate_projection(PolyhedralSpace::make(Matrix{{1, 0}, {2, 0}, {0, 1}}), {0, 1}),
                  PreconditionError);
}

TEST_CASE("enumerate_parallelepiped_mvse") {
  CHECK(enumerate_parallelepiped_mvse(PolyhedralSpace::make(Matrix::identity(3))) == std::vector<Subset>{{0, 1, 2}});
  CHECK(enumerate_parallelepiped_mvse(PolyhedralSpace::make(kY3)).size() == 3);
  const auto sp = PolyhedralSpace::make(Matrix{{1, 0}, {0, 1}, {2, 1}});
  CHECK(enumerate_parallelepiped_mvse(sp) == std::vector<Subset>{{1, 2}});
}

TEST_CASE("random_projection") {
  const auto id = PolyhedralSpace::make(Matrix::identity(2));
  CHECK(random_projection(id, 5).coeffs() == Matrix::identity(2));
  const auto s3 = PolyhedralSpace::make(kY3);
  CHECK(random_projection(s3, 9).coeffs() == random_projection(s3, 9).coeffs());
  for (std::uint64_t k = 0; k < 200; ++k) CHECK(volume_ratio(s3, random_projection(s3, k)) >= 1);
}

TEST_CASE("plucker relations") {
  const std::vector<Index> first_two{0, 1};
  CHECK(plucker_relation(kY4.select_cols(first_two), {}, {0, 1, 2, 3}) == 0);
  CHECK_THROWS_AS(plucker_relation(kY4, {0}, {0, 1, 2, 3}), PreconditionError);
  const Matrix repeated{{1, 2}, {3, 4}, {1, 2}, {5, -1}};
  CHECK(plucker_relation(repeated, {}, {0, 1, 2, 3}) == 0);
  CHECK_THROWS_AS(plucker_relation(kY3, {}, {0, 1, 2, 5}), PreconditionError);
  Rng rng(44);
  const Matrix y = rng.rational_matrix(6, 3, 5, 3);
  for (const auto& rows : oracle::all_subsets(6, 5)) {
    CHECK(plucker_relation(y, {rows[0]}, {rows[1], rows[2], rows[3], rows[4]}) == 0);
    CHECK(plucker_relation(y, {rows[4]}, {rows[3], rows[0], rows[2], rows[1]}) == 0);
  }
}

TEST_CASE("minimize_ratio_search") {
  CHECK(minimize_ratio_search(PolyhedralSpace::make(kY3), 2, 1).ratio == 1);
  CHECK(minimize_ratio_search(PolyhedralSpace::make(Matrix::identity(3)), 2, 1).ratio == 1);
  CHECK(minimize_ratio_search(PolyhedralSpace::make(kY4), 2, 1).ratio == 1);
  const auto sp = PolyhedralSpace::make(Matrix{{1, 0}, {0, 1}, {1, 2}, {2, -1}});
  const auto r = minimize_ratio_search(sp, 3, 5);
  CHECK(r.ratio >= 1);
  CHECK(r.ratio == volume_ratio(sp, r.best));
}

TEST_CASE("find_circuit") {
  const auto s3 = PolyhedralSpace::make(kY3);
  CHECK(find_circuit(Projection::make(s3, simplex({q(1, 3), q(1, 3)}))) == Subset{0, 1, 2});
  CHECK_FALSE(find_circuit(Projection::make(s3, simplex({0, 0}))));
  const auto id = PolyhedralSpace::make(Matrix::identity(3));
  CHECK_FALSE(find_circuit(Projection::make(id, Matrix::identity(3))));
  const auto s4 = PolyhedralSpace::make(kY4);
  CHECK(find_circuit(Projection::make(s4, simplex({q(1, 3), q(1, 3), q(1, 3)}))) == Subset{0, 1, 2});
}

TEST_CASE("hexagonal_subspace on Y3") {
  const auto s3 = PolyhedralSpace::make(kY3);
  const auto r = hexagonal_subspace(s3, Projection::make(s3, simplex({q(1, 3), q(1, 3)})));
  CHECK(r.ball.kind == HexagonKind::hexagon_affinely_regular);
  CHECK(r.b_bounded);
  CHECK(r.c_bounded);
  CHECK(r.difference_bounded);
  auto verts = r.ball.ordered_vertices;
  std::sort(verts.begin(), verts.end());
  std::vector<Vector> want{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, 1}, {1, -1}};
  std::sort(want.begin(), want.end());
  CHECK(verts == want);
  CHECK(rank(Matrix::from_columns({r.basis_pair.first, r.basis_pair.second}, 3).hconcat(kY3)) == 2);
}

TEST_CASE("hexagonal_subspace on Y4 and larger spaces") {
  const auto s4 = PolyhedralSpace::make(kY4);
  const auto r = hexagonal_subspace(s4, Projection::make(s4, simplex({q(1, 3), q(1, 3), q(1, 3)})));
  CHECK(r.ball.kind == HexagonKind::hexagon_affinely_regular);
  CHECK((r.b_bounded && r.c_bounded && r.difference_bounded));

  const Matrix y5{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}};
  const auto s5 = PolyhedralSpace::make(y5);
  const auto w = find_hexagon_witness(s5);
  REQUIRE(w);
  CHECK(volume_ratio(s5, *w) == 1);
  const auto r5 = hexagonal_subspace(s5, *w);
  CHECK(r5.ball.kind == HexagonKind::hexagon_affinely_regular);
  CHECK_FALSE(r5.b_c_rows.empty());
  CHECK((r5.b_bounded && r5.c_bounded && r5.difference_bounded));
}

TEST_CASE("hexagonal_subspace preconditions and the cube control") {
  const auto s3 = PolyhedralSpace::make(kY3);
  CHECK_THROWS_AS(hexagonal_subspace(s3, Projection::make(s3, simplex({0, 0}))), PreconditionError);
  CHECK_THROWS_AS(hexagonal_subspace(s3, Projection::make(s3, Matrix{{0, -1, 1}, {-1, 0, 1}})), PreconditionError);
  const auto id = PolyhedralSpace::make(Matrix::identity(3));
  CHECK(enumerate_parallelepiped_mvse(id).size() == 1);
  CHECK_FALSE(find_hexagon_witness(id));
}
