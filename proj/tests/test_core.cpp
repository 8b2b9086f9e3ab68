#include <doctest.h>

#include "mvse/core/errors.hpp"
#include "mvse/core/linalg.hpp"
#include "mvse/core/minors.hpp"
#include "mvse/core/parallel.hpp"
#include "mvse/core/random.hpp"
#include "oracles.hpp"

using namespace mvse;
using oracle::q;

TEST_CASE("parse_rational canonicalizes and rejects junk") {
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("det on fixed cases") {
  CHECK(det(Matrix::identity(3)) == 1);
  CHECK(det(Matrix{{1, 1}, {-1, 1}}) == 2);
  CHECK(det(Matrix(0, 0)) == 1);
  CHECK(det(Matrix{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(det(Matrix(2, 3)), ShapeError);
}

TEST_CASE("det matches the cofactor oracle on random matrices") {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    const Index n = rng.uniform(1, 5);
    const Matrix m = rng.rational_matrix(n, n, 7, 5);
    CHECK(det(m) == oracle::cofactor_det(m));
  }
}

TEST_CASE("inverse, rank and null space") {
  Rng rng(12);
  for (int i = 0; i < 30; ++i) {
    const Matrix m = rng.rational_matrix(3, 3, 5, 3);
    if (det(m) == 0) continue;
    CHECK(m * inverse(m) == Matrix::identity(3));
  }
  CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), PreconditionError);
  const Matrix y{{1, 0}, {0, 1}, {1, 1}};
  CHECK(rank(y) == 2);
  const Matrix w = left_null_space(y);
  REQUIRE(w.rows() == 1);
  CHECK(w * y == Matrix(1, 2));
  CHECK(independent_columns(Matrix{{1, 2, 0}, {0, 0, 1}}) == std::vector<Index>{0, 2});
}

TEST_CASE("plucker examples") {
  CHECK(plucker(Matrix{{1, 0}, {0, 1}, {1, 1}}).values == std::vector<Rational>{1, 1, -1});
  CHECK(plucker(Matrix::identity(3)).values == std::vector<Rational>{1});
  CHECK_THROWS_AS(plucker(Matrix(2, 3)), ShapeError);
}

TEST_CASE("plucker entries match per-minor cofactor oracle") {
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const Index d = rng.uniform(1, 3), m = d + rng.uniform(0, 3);
    const Matrix y = rng.rational_matrix(m, d, 5, 3);
    const auto p = plucker(y);
    const auto subs = oracle::all_subsets(m, d);
    REQUIRE(p.values.size() == subs.size());
    std::vector<Index> cols(d);
    std::iota(cols.begin(), cols.end(), 0);
    for (Index k = 0; k < subs.size(); ++k) CHECK(p.values[k] == oracle::minor_of(y, subs[k], cols));
  }
}

TEST_CASE("plucker is det-homogeneous under right multiplication") {
  Rng rng(14);
  for (int i = 0; i < 30; ++i) {
    const Index d = rng.uniform(1, 3), m = d + rng.uniform(0, 3);
    const Matrix y = rng.rational_matrix(m, d, 5, 3);
    const Matrix c = rng.rational_matrix(d, d, 5, 3);
    const auto lhs = plucker(y * c);
    const auto rhs = plucker(y);
    const Rational dc = det(c);
    for (Index k = 0; k < lhs.values.size(); ++k) CHECK(lhs.values[k] == dc * rhs.values[k]);
  }
}

TEST_CASE("subsets and ranks") {
  const auto s = subsets(5, 3);
  CHECK(s == oracle::all_subsets(5, 3));
  for (Index i = 0; i < s.size(); ++i) CHECK(subset_rank(s[i], 5) == i);
  CHECK(complement({1, 3}, 5) == Subset{0, 2, 4});
  CHECK(binomial(7, 3) == 35);
}

TEST_CASE("laplace_sign examples") {
  CHECK(laplace_sign({0, 1}, 2) == 1);
  CHECK(laplace_sign({0, 1, 2}, 5) == 1);
  CHECK(laplace_sign({0, 2}, 3) == -1);
  // S = {2,3} in m = 4: permutation (2,3,1,4) has two inversions.
  CHECK(laplace_sign({1, 2}, 4) == 1);
}

TEST_CASE("laplace_sign matches permutation parity") {
  for (Index m = 1; m <= 7; ++m) {
    for (Index d = 0; d <= m; ++d) {
      for (const auto& s : oracle::all_subsets(m, d)) {
        std::vector<Index> perm = s;
        for (Index i : complement(s, m)) perm.push_back(i);
        CHECK(laplace_sign(s, m) == oracle::parity(perm));
      }
    }
  }
}

TEST_CASE("laplace_expand") {
  const Matrix i5 = Matrix::identity(5);
  const std::vector<Index> first{0, 1}, rest{2, 3, 4};
  CHECK(laplace_expand(i5.select_cols(first), i5.select_cols(rest)) == 1);

  Rng rng(15);
  for (int i = 0; i < 40; ++i) {
    const Matrix f = rng.rational_matrix(5, 2, 5, 3), g = rng.rational_matrix(5, 3, 5, 3);
    CHECK(laplace_expand(f, g) == det(f.hconcat(g)));
    const std::vector<Index> swapped{1, 0, 2};
    CHECK(laplace_expand(f, g.select_cols(swapped)) == -laplace_expand(f, g));
  }
}

TEST_CASE("cauchy_binet examples") {
  const Matrix y{{1, 0}, {0, 1}, {1, 1}};
  const Matrix a{{0, -1, 1}, {-1, 0, 1}};
  const auto w = plucker(a.transpose());
  CHECK(w.values == std::vector<Rational>{-1, 1, -1});
  CHECK(cauchy_binet(plucker(y), w) == 1);
  CHECK(cauchy_binet(plucker(y), plucker((a * Rational(2)).transpose())) == 4);
}

TEST_CASE("cauchy_binet equals det(A Y)") {
  Rng rng(16);
  for (int i = 0; i < 40; ++i) {
    const Index d = rng.uniform(1, 3), m = d + rng.uniform(0, 4);
    const Matrix y = rng.rational_matrix(m, d, 5, 3), a = rng.rational_matrix(d, m, 5, 3);
    CHECK(cauchy_binet(plucker(y), plucker(a.transpose())) == oracle::cofactor_det(a * y));
  }
}

TEST_CASE("complementary_check") {
  const Matrix p{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}};
  const auto r = complementary_check(p, 1);
  CHECK(r.holds);
  CHECK(r.sigma == det(p));

  Matrix g = Matrix::identity(4);
  g(0, 0) = q(3, 5);
  g(0, 1) = q(4, 5);
  g(1, 0) = q(-4, 5);
  g(1, 1) = q(3, 5);
  for (Index d = 1; d <= 3; ++d) {
    const auto rg = complementary_check(g, d);
    CHECK(rg.holds);
    CHECK(rg.sum_w_squared == 1);
    CHECK(rg.sum_v_squared == 1);
  }

  g(0, 0) = q(3, 4);
  CHECK_THROWS_AS(complementary_check(g, 2), PreconditionError);
}

TEST_CASE("det_perturb_bound") {
  const std::vector<Vector> xs{{1, 0}, {0, 1}};
  const auto zero = det_perturb_bound(xs, xs[0], 0, 1);
  CHECK(zero.lhs == 0);
  CHECK(zero.holds);

  const auto r = det_perturb_bound(xs, {1, q(1, 2)}, q(1, 2), 1);
  CHECK(r.lhs == 0);
  CHECK(r.rhs == q(1, 2));
  CHECK(r.holds);

  const auto tight = det_perturb_bound(xs, {q(3, 2), 0}, q(1, 2), 1);
  CHECK(tight.lhs == q(1, 2));
  CHECK(tight.holds);

  CHECK_THROWS_AS(det_perturb_bound(xs, {2, 0}, q(1, 2), 1), PreconditionError);

  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const Index d = rng.uniform(2, 4);
    std::vector<Vector> family;
    for (Index k = 0; k < d; ++k) family.push_back(rng.rational_vector(d, 3, 2));
    Rational bound = 0;
    for (Index k = 1; k < d; ++k) {
      const Rational n2 = norm2(family[k]);
      while (bound * bound < n2) bound += 1;
    }
    const Vector delta = rng.rational_vector(d, 2, 3);
    Rational l = 0;
    while (l * l < norm2(delta)) l += q(1, 4);
    CHECK(det_perturb_bound(family, add(family[0], delta), l, bound).holds);
  }
}

TEST_CASE("Rng is reproducible") {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.rational(9, 9) == b.rational(9, 9));
  Rng c(5);
  for (int i = 0; i < 1000; ++i) {
    const auto v = c.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("parallel_for fills every slot and rethrows") {
  std::vector<int> out(1000, 0);
  parallel_for(out.size(), [&](std::size_t i) { out[i] = static_cast<int>(i) * 2; });
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i) * 2);
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 3) throw DefectError("core", "boom");
                  }),
                  DefectError);
}
