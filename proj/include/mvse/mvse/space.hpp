#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mvse/core/matrix.hpp"
#include "mvse/core/minors.hpp"
#include "mvse/zonotope/zonotope.hpp"

namespace mvse {

/// A d-dimensional subspace of l_inf^m, given by an m x d basis matrix Y of
/// full column rank. Row j of Y is the j-th coordinate functional restricted
/// to the subspace; the unit ball is { a : |Y a|_inf <= 1 }.
class PolyhedralSpace {
 public:
  /// Throws PreconditionError when rank(Y) < d.
  static PolyhedralSpace make(Matrix basis);

  const Matrix& basis() const noexcept { return basis_; }
  const PluckerVector& minors() const noexcept { return minors_; }
  Index ambient() const noexcept { return basis_.rows(); }
  Index dim() const noexcept { return basis_.cols(); }

 private:
  PolyhedralSpace(Matrix basis, PluckerVector minors) : basis_(std::move(basis)), minors_(std::move(minors)) {}
  Matrix basis_;
  PluckerVector minors_;
};

/// A linear projection of l_inf^m onto the space: d x m matrix A with
/// A * Y = I. In Y-coordinates the image of the cube is the zonotope spanned
/// by the columns of A.
class Projection {
 public:
  /// Throws PreconditionError naming the first entry where A * Y != I.
  static Projection make(const PolyhedralSpace& space, Matrix coeffs);

  const Matrix& coeffs() const noexcept { return coeffs_; }
  /// Maximal minors of A^T, in the same subset order as the space's minors.
  const PluckerVector& minors() const noexcept { return minors_; }
  Zonotope image() const;

 private:
  Projection(Matrix coeffs, PluckerVector minors) : coeffs_(std::move(coeffs)), minors_(std::move(minors)) {}
  Matrix coeffs_;
  PluckerVector minors_;
};

/// max_S |u_S| * sum_S |w_S| / |sum_S u_S w_S|, i.e. the volume of the image
/// of the cube divided by the volume of a minimal-volume sufficient
/// enlargement. Always >= 1; equal to 1 exactly for minimal projections.
Rational volume_ratio(const PolyhedralSpace& space, const Projection& proj);

/// 2^d / max_S |u_S|, in Y-basis coordinates.
Rational mvse_volume(const PolyhedralSpace& space);

/// Y * Y_S^{-1} for the first subset S attaining max |u_S|: some d rows form
/// the identity and every maximal minor has modulus <= 1.
PolyhedralSpace normalize_laa(const PolyhedralSpace& space);
/// Same with an explicit pivot subset (must be nonsingular).
PolyhedralSpace normalize_at(const PolyhedralSpace& space, const Subset& pivot);

/// Projection along the coordinates outside S: Y_S^{-1} placed in the
/// columns S. Throws PreconditionError when Y_S is singular.
Projection coordinate_projection(const PolyhedralSpace& space, const Subset& s);

/// Every S with |u_S| = max |u|; their coordinate projections are MVSEs.
std::vector<Subset> enumerate_parallelepiped_mvse(const PolyhedralSpace& space);

/// A_0 + C * W, with A_0 the coordinate projection at the first maximal
/// minor, W a basis of the left null space of Y and C a seeded random
/// rational d x (m-d) matrix.
Projection random_projection(const PolyhedralSpace& space, std::uint64_t seed);

/// t_12 t_34 - t_14 t_32 + t_24 t_31, where t_ab is the determinant of the
/// rows (gamma..., kappa_a, kappa_b). Vanishes identically. Throws
/// PreconditionError on repeated or out-of-range row indices.
Rational plucker_relation(const Matrix& m, const std::vector<Index>& gamma, const std::vector<Index>& kappa);

struct SearchResult {
  Projection best;
  Rational ratio;
  bool from_coordinate = false;
  std::size_t evaluations = 0;
};

/// Best of all coordinate projections and a seeded descent over the affine
/// family A_0 + C * W. Never worse than the best coordinate projection.
SearchResult minimize_ratio_search(const PolyhedralSpace& space, std::size_t restarts, std::uint64_t seed);

/// Smallest minimal linearly dependent set of at least 3 columns of A (the
/// image generators), lexicographic tie-break; empty when none exists.
std::optional<Subset> find_circuit(const Projection& proj);

}  // namespace mvse
