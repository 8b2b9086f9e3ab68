#include "mvse/bmdist/bmdist.hpp"

#include "mvse/core/errors.hpp"
#include "mvse/core/linalg.hpp"
#include "mvse/core/minors.hpp"
#include "mvse/core/random.hpp"

namespace mvse {

namespace {

// n with <n, x> = det[v_1 .. v_{d-1} x].
Vector orthogonal_complement(const std::vector<Vector>& vs, Index d) {
  Vector n(d);
  for (Index i = 0; i < d; ++i) {
    auto cols = vs;
    Vector e(d);
    e[i] = 1;
    cols.push_back(std::move(e));
    n[i] = det(Matrix::from_columns(cols, d));
  }
  return n;
}

}  // namespace

BMBound bm_upper_bound(const Zonotope& z1, const Zonotope& z2, std::uint64_t seed, std::size_t samples) {
  if (z1.dim() != z2.dim()) throw ShapeError("bmdist", "zonotopes live in different dimensions");
  if (!full_dimensional(z1) || !full_dimensional(z2)) {
    throw PreconditionError("bmdist", "both zonotopes must be full-dimensional");
  }
  const Index d = z1.dim();
  const Zonotope sum = canonicalize(minkowski_sum(z1, z2));

  std::vector<Vector> directions;
  // Extreme rays of the common linearity cones of h1 and h2: directions
  // orthogonal to d - 1 independent generators of Z1 + Z2.
  for (const auto& pick : subsets(sum.size(), d - 1)) {
    std::vector<Vector> vs;
    for (Index i : pick) vs.push_back(sum.generator(i));
    Vector n = orthogonal_complement(vs, d);
    if (!is_zero(n)) directions.push_back(primitive_direction(n));
  }
  if (d >= 3) {
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      Vector x(d);
      for (auto& c : x) c = Rational(static_cast<long>(rng.uniform(-1000, 1000)));
      if (!is_zero(x)) directions.push_back(std::move(x));
    }
  }

  BMBound out;
  out.exact = true;
  bool first = true;
  for (const auto& x : directions) {
    const Rational r = support(z1, x) / support(z2, x);
    if (first || r > out.max_ratio) {
      out.max_ratio = r;
      out.max_ratio_direction = x;
    }
    if (first || r < out.min_ratio) {
      out.min_ratio = r;
      out.min_ratio_direction = x;
    }
    first = false;
  }
  out.directions = directions.size();
  out.upper_bound = out.max_ratio / out.min_ratio;
  return out;
}

}  // namespace mvse
