#pragma once

#include <optional>
#include <vector>

#include "mvse/core/matrix.hpp"

namespace mvse {

/// Exact determinant by Gaussian elimination over Q. Throws ShapeError for
/// non-square input; the 0x0 determinant is 1.
Rational det(const Matrix& m);

Index rank(const Matrix& m);

/// Throws PreconditionError when m is singular.
Matrix inverse(const Matrix& m);

/// Greedy scan in index order: the first maximal set of linearly independent
/// columns (resp. rows). Deterministic.
std::vector<Index> independent_columns(const Matrix& m);
std::vector<Index> independent_rows(const Matrix& m);

/// Rows form a basis of { w : w * m = 0 } (the left null space). The result
/// has (rows - rank) rows.
Matrix left_null_space(const Matrix& m);

/// Coordinates of v in the basis given by the columns of `basis` (square,
/// invertible).
Vector solve(const Matrix& basis, std::span<const Rational> v);

}  // namespace mvse
