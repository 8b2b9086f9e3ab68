#include "mvse/zonotope/zonotope.hpp"

#include <algorithm>

#include "mvse/core/errors.hpp"
#include "mvse/core/linalg.hpp"
#include "mvse/core/minors.hpp"

namespace mvse {

Zonotope::Zonotope(Index dim, std::vector<Vector> generators) : dim_(dim), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.size() != dim_) throw ShapeError("zonotope", "generator length differs from the dimension");
  }
}

Zonotope Zonotope::from_columns(const Matrix& columns) { return Zonotope(columns.rows(), columns.columns()); }

Matrix Zonotope::generator_matrix() const { return Matrix::from_columns(generators_, dim_); }

Vector positive_orientation(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (x != 0) return x > 0 ? Vector(v.begin(), v.end()) : scaled(v, -1);
  }
  return {v.begin(), v.end()};
}

Vector primitive_direction(std::span<const Rational> v) {
  Integer lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (const auto& x : v) {
    const Integer num = Rational(x * lcm_den).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) return {v.begin(), v.end()};
  Vector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = Rational(v[i] * lcm_den / g);
  return out;
}

namespace {

// Direction key: v divided by its first nonzero coordinate.
Vector direction_key(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (x != 0) return scaled(v, 1 / x);
  }
  return {v.begin(), v.end()};
}

Rational leading(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (x != 0) return x;
  }
  return 0;
}

}  // namespace

Zonotope canonicalize(const Zonotope& z) {
  std::vector<Vector> keys;
  std::vector<Vector> reps;     // positively oriented first member
  std::vector<Rational> total;  // sum of |lambda| with g = lambda * rep
  for (const auto& g : z.generators()) {
    if (is_zero(g)) continue;
    Vector key = direction_key(g);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(std::move(key));
      reps.push_back(positive_orientation(g));
      total.emplace_back(1);
    } else {
      const Index k = static_cast<Index>(it - keys.begin());
      total[k] += abs(leading(g) / leading(reps[k]));
    }
  }
  std::vector<Vector> gens;
  gens.reserve(reps.size());
  for (Index k = 0; k < reps.size(); ++k) gens.push_back(scaled(reps[k], total[k]));
  return Zonotope(z.dim(), std::move(gens));
}

Rational support(const Zonotope& z, std::span<const Rational> x) {
  if (x.size() != z.dim()) throw ShapeError("zonotope", "direction has the wrong dimension");
  Rational h = 0;
  for (const auto& g : z.generators()) h += abs(dot(g, x));
  return h;
}

Index rank(const Zonotope& z) {
  if (z.size() == 0) return 0;
  return mvse::rank(z.generator_matrix());
}

bool full_dimensional(const Zonotope& z) { return rank(z) == z.dim(); }

Rational volume(const Zonotope& z) {
  const Index d = z.dim();
  const Index r = rank(z);
  if (r < d) {
    throw PreconditionError("zonotope", "degenerate zonotope: rank " + std::to_string(r) + " < dimension " +
                                            std::to_string(d));
  }
  const Matrix g = z.generator_matrix();
  Rational sum = 0;
  for (const auto& s : subsets(z.size(), d)) sum += abs(det(g.select_cols(s)));
  Rational scale = 1;
  for (Index i = 0; i < d; ++i) scale *= 2;
  return scale * sum;
}

std::vector<Vector> vertices2d(const Zonotope& z) {
  if (z.dim() != 2) throw PreconditionError("zonotope", "vertices2d needs d = 2");
  if (!full_dimensional(z)) throw PreconditionError("zonotope", "vertices2d needs a full-dimensional zonogon");
  std::vector<Vector> gens = canonicalize(z).generators();
  for (auto& g : gens) {
    if (g[1] < 0 || (g[1] == 0 && g[0] < 0)) g = scaled(g, -1);
  }
  // All generators lie in the half plane of angles [0, pi); sort by angle.
  std::sort(gens.begin(), gens.end(), [](const Vector& a, const Vector& b) {
    return a[0] * b[1] - a[1] * b[0] > 0;
  });
  Vector v(2);
  for (const auto& g : gens) v = add(v, g);
  std::vector<Vector> out;
  out.reserve(2 * gens.size());
  for (const auto& g : gens) {
    out.push_back(v);
    v = sub(v, scaled(g, 2));
  }
  for (const auto& g : gens) {
    out.push_back(v);
    v = add(v, scaled(g, 2));
  }
  return out;
}

Vector cross(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != 3 || b.size() != 3) throw ShapeError("zonotope", "cross product needs 3-vectors");
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::vector<Facet> hrep(const Zonotope& z) {
  const Index d = z.dim();
  if (d < 2 || d > 3) throw PreconditionError("zonotope", "hrep is limited to d in {2, 3}");
  if (!full_dimensional(z)) throw PreconditionError("zonotope", "hrep needs a full-dimensional zonotope");
  const Zonotope c = canonicalize(z);
  std::vector<Vector> normals;
  auto push = [&](const Vector& raw) {
    if (is_zero(raw)) return;
    Vector n = primitive_direction(positive_orientation(raw));
    if (std::find(normals.begin(), normals.end(), n) == normals.end()) normals.push_back(std::move(n));
  };
  if (d == 2) {
    for (const auto& g : c.generators()) push(Vector{-g[1], g[0]});
  } else {
    for (Index i = 0; i < c.size(); ++i)
      for (Index j = i + 1; j < c.size(); ++j) push(cross(c.generator(i), c.generator(j)));
  }
  std::vector<Facet> facets;
  facets.reserve(2 * normals.size());
  for (const auto& n : normals) {
    const Rational h = support(c, n);
    facets.push_back({n, h});
    facets.push_back({scaled(n, -1), h});
  }
  return facets;
}

const char* to_string(Location loc) {
  switch (loc) {
    case Location::interior: return "interior";
    case Location::boundary: return "boundary";
    case Location::outside: return "outside";
  }
  return "?";
}

Location locate(std::span<const Facet> facets, std::span<const Rational> p) {
  bool on_boundary = false;
  for (const auto& f : facets) {
    const Rational s = dot(f.normal, p);
    if (s > f.offset) return Location::outside;
    if (s == f.offset) on_boundary = true;
  }
  return on_boundary ? Location::boundary : Location::interior;
}

Location contains(const Zonotope& z, std::span<const Rational> p) {
  const auto facets = hrep(z);
  return locate(facets, p);
}

bool is_parallelepiped(const Zonotope& z) { return canonicalize(z).size() == z.dim(); }

Zonotope minkowski_sum(const Zonotope& a, const Zonotope& b) {
  if (a.dim() != b.dim()) throw ShapeError("zonotope", "Minkowski sum of different dimensions");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Zonotope(a.dim(), std::move(gens));
}

Zonotope scaled(const Zonotope& z, const Rational& t) {
  std::vector<Vector> gens;
  gens.reserve(z.size());
  for (const auto& g : z.generators()) gens.push_back(scaled(g, t));
  return Zonotope(z.dim(), std::move(gens));
}

Zonotope linear_image(const Matrix& map, const Zonotope& z) {
  if (map.cols() != z.dim()) throw ShapeError("zonotope", "linear map does not match the dimension");
  std::vector<Vector> gens;
  gens.reserve(z.size());
  for (const auto& g : z.generators()) gens.push_back(map * g);
  return Zonotope(map.rows(), std::move(gens));
}

}  // namespace mvse
