#pragma once

#include <vector>

#include "mvse/core/matrix.hpp"

namespace mvse {

/// Strictly increasing list of 0-based row indices. Text and JSON forms use
/// 1-based indices.
using Subset = std::vector<Index>;

Integer binomial(Index n, Index k);

/// All k-subsets of {0..n-1} in lexicographic order. This order is the one
/// used for every minor vector in the library.
std::vector<Subset> subsets(Index n, Index k);

/// Position of `s` in the lexicographic enumeration of k-subsets of {0..n-1}.
Index subset_rank(const Subset& s, Index n);

/// Complement of `s` in {0..n-1}, ascending.
Subset complement(const Subset& s, Index n);

/// The C(m, d) maximal minors of an m x d matrix, one per d-subset of rows
/// in lexicographic order.
struct PluckerVector {
  Index m = 0;
  Index d = 0;
  std::vector<Rational> values;

  const Rational& at(const Subset& s) const { return values[subset_rank(s, m)]; }
  Rational max_abs() const;
  bool operator==(const PluckerVector&) const = default;
};

/// Throws ShapeError when m < d.
PluckerVector plucker(const Matrix& m);

/// Sign of the permutation (S ascending, complement ascending) of {0..m-1}.
int laplace_sign(const Subset& s, Index m);

/// Generalized Laplace expansion of det([f g]) along the first d columns:
/// sum over d-subsets S of sign(S) * det(f_S) * det(g_{S^c}).
Rational laplace_expand(const Matrix& f, const Matrix& g);

/// Sum_S u_S * w_S. With u = plucker(Y) and w = plucker(A^T) this is
/// det(A * Y).
Rational cauchy_binet(const PluckerVector& u, const PluckerVector& w);

struct ComplementaryReport {
  int sigma = 0;            ///< global sign: w_S = sigma * theta_S * v_S
  Rational sum_w_squared;   ///< sum of squared d x d minors of the first d columns
  Rational sum_v_squared;   ///< same for the complementary minors
  bool holds = false;
};

/// For an orthogonal m x m matrix split as [F G] with F having d columns,
/// checks the compound-matrix identities between the minors of F and the
/// complementary minors of G. Throws PreconditionError unless
/// q * q^T == I exactly.
ComplementaryReport complementary_check(const Matrix& q, Index d);

struct PerturbationReport {
  Rational lhs;  ///< |det[z, x_2..x_d] - det[x_1..x_d]|
  Rational rhs;  ///< l * bound^(d-1)
  bool holds = false;
};

/// Perturbing one column of a determinant by at most l changes it by at most
/// l times the product of the other column norms. Norm preconditions are
/// checked in squared form; violations raise PreconditionError.
PerturbationReport det_perturb_bound(const std::vector<Vector>& xs, const Vector& z,
                                     const Rational& l, const Rational& bound);

}  // namespace mvse
