#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mvse/core/matrix.hpp"
#include "mvse/core/minors.hpp"
#include "mvse/zonotope/zonotope.hpp"

namespace mvse {

/// Brute-force limit on min(rows, cols) for total-unimodularity checks.
inline constexpr Index kMaxTuOrder = 6;

/// Square submatrix given by row and column index lists.
struct Violation {
  Subset rows;
  Subset cols;
  Rational det;
};

/// True iff every square minor lies in {-1, 0, 1}. Entries must already be
/// in {-1, 0, 1}; throws PreconditionError otherwise and SizeLimitError when
/// min(rows, cols) > kMaxTuOrder.
bool is_tu(const Matrix& m);

/// A minimum-order square submatrix with |det| >= 2. Orders are searched
/// ascending; within an order the lexicographically least (rows, cols) pair
/// wins. Empty iff is_tu(m).
std::optional<Violation> tu_violation(const Matrix& m);

/// d + 2 columns such that each of the six d x d minors obtained by joining
/// `x_hat` with two members of `p_hat` is nonzero.
struct GomoryCertificate {
  std::vector<Index> x_hat;  ///< d - 2 columns
  std::vector<Index> p_hat;  ///< 4 columns
};

/// Certificate for a non-TU {-1,0,1} matrix that contains the d x d identity
/// among its columns. Runs the pivoting argument: grow the number of unit
/// columns inside a frame of d columns with |det| >= 2 by row additions and
/// column negations until a pivot would create an entry of modulus 2; the
/// 2 x 2 obstruction, its two unit columns and the remaining unit columns
/// form the certificate. Throws PreconditionError when D is TU, has entries
/// outside {-1,0,1} or lacks an identity submatrix.
GomoryCertificate gomory_certificate(const Matrix& d);

/// The six joined minors in the order (p1p2, p1p3, p1p4, p2p3, p2p4, p3p4).
std::vector<Rational> gomory_minors(const Matrix& d, const GomoryCertificate& cert);
bool verify_gomory(const Matrix& d, const GomoryCertificate& cert);

struct ScalingRecord {
  std::vector<Rational> row_scales;
  std::vector<Rational> col_scales;
  std::vector<std::pair<Index, Index>> forest_edges;  ///< (row, col)
};

/// Scales rows and columns by positive rationals so that every edge of a
/// spanning forest of the bipartite row/column support graph becomes +-1.
/// The forest is grown breadth-first from row 0 (then the next unvisited row),
/// scanning neighbours in ascending order. Throws PreconditionError when the
/// rank is below the row count.
std::pair<Matrix, ScalingRecord> forest_scaling(const Matrix& g);

/// Certificate that Z is linearly equivalent to sum I(a_i tau_i) with
/// tau = [tau_1 .. tau_n] totally unimodular: C * z_i = a_i * tau_i for the
/// canonical generators z_i.
struct TUWitness {
  Matrix basis_change;               ///< C, d x d
  std::vector<Rational> generator_scales;  ///< a_i > 0
  Matrix tu_matrix;                  ///< tau, d x n
  Zonotope canonical;                ///< the generators the witness refers to
};

struct Refusal {
  std::string reason;
  std::optional<std::pair<Index, Index>> entry;  ///< offending entry of the scaled matrix
  std::optional<Violation> violation;            ///< offending minor
};

using MembershipResult = std::variant<TUWitness, Refusal>;

/// Decides membership of Z in the class of zonotopes spanned by positive
/// multiples of the columns of a totally unimodular matrix. Uses the first
/// independent set of canonical generators as basis.
MembershipResult td_membership(const Zonotope& z);

/// C^{-1} (a_i tau_i) == +-z_i for every generator.
bool verify_witness(const TUWitness& w);

}  // namespace mvse
