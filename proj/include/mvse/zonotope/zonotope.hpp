#pragma once

#include <span>
#include <vector>

#include "mvse/core/matrix.hpp"

namespace mvse {

/// Minkowski sum of the symmetric segments [-z_i, z_i] in R^d. Construction
/// only validates dimensions; see canonicalize() for the merged form.
class Zonotope {
 public:
  Zonotope() = default;
  Zonotope(Index dim, std::vector<Vector> generators);

  /// Generators are the columns of `columns` (d x n).
  static Zonotope from_columns(const Matrix& columns);

  Index dim() const noexcept { return dim_; }
  Index size() const noexcept { return generators_.size(); }
  const std::vector<Vector>& generators() const noexcept { return generators_; }
  const Vector& generator(Index i) const { return generators_[i]; }
  /// d x n matrix with the generators as columns.
  Matrix generator_matrix() const;

 private:
  Index dim_ = 0;
  std::vector<Vector> generators_;
};

/// Scales v so that its first nonzero coordinate is positive and it stays
/// parallel to v. Zero vectors are returned unchanged.
Vector positive_orientation(std::span<const Rational> v);
/// Primitive integer vector with the same direction (and sign) as v.
Vector primitive_direction(std::span<const Rational> v);

/// Drops zero generators and merges parallel ones. Each direction class is
/// represented by its first member, oriented so the leading nonzero
/// coordinate is positive, and scaled by the total length of the class.
/// Classes keep the order of their first appearance. The point set is
/// unchanged.
Zonotope canonicalize(const Zonotope& z);

/// h_Z(x) = sum_i |<x, z_i>|.
Rational support(const Zonotope& z, std::span<const Rational> x);

Index rank(const Zonotope& z);
bool full_dimensional(const Zonotope& z);

/// 2^d * sum over d-subsets S of |det(z_S)|. Throws PreconditionError with
/// the rank when Z is not full-dimensional.
Rational volume(const Zonotope& z);

/// Counterclockwise vertex cycle of a zonogon (d = 2). Starts at the sum of
/// the generators oriented into the upper half plane, then walks the edges
/// -2z_i and +2z_i in angular order.
std::vector<Vector> vertices2d(const Zonotope& z);

struct Facet {
  Vector normal;    ///< primitive integer direction
  Rational offset;  ///< support(Z, normal)
};

/// Facets of a full-dimensional zonotope in d = 2 or 3. One facet pair
/// (normal, -normal) per direction class of (d-1)-subsets of generators.
std::vector<Facet> hrep(const Zonotope& z);

enum class Location { interior, boundary, outside };
const char* to_string(Location loc);

Location locate(std::span<const Facet> facets, std::span<const Rational> p);
Location contains(const Zonotope& z, std::span<const Rational> p);

/// True iff the canonical form has exactly d generators.
bool is_parallelepiped(const Zonotope& z);

Zonotope minkowski_sum(const Zonotope& a, const Zonotope& b);
Zonotope scaled(const Zonotope& z, const Rational& t);
/// Image under x -> map * x.
Zonotope linear_image(const Matrix& map, const Zonotope& z);

/// Exact cross product of two vectors in R^3.
Vector cross(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace mvse
