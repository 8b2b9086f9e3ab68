#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mvse/mvse/space.hpp"
#include "mvse/zonotope/polygon.hpp"

namespace mvse {

/// Output of the hexagonal-subspace construction for a minimal projection
/// whose image is not a parallelepiped.
struct HexagonReport {
  Subset circuit;                    ///< circuit among the columns of A
  std::vector<Index> basis_rows;     ///< d coordinates turned into the identity
  Index circuit_row = 0;             ///< coordinate whose row reads (1, 1, *, ...)
  Vector circuit_coefficients;       ///< a: last circuit column in the basis of the others
  std::vector<Index> row_order;      ///< row permutation used for normalized_matrix
  Matrix normalized_matrix;          ///< m x d, rows permuted into the staircase form
  std::pair<Vector, Vector> basis_pair;  ///< first two columns, in the original coordinates
  std::vector<std::pair<Rational, Rational>> b_c_rows;
  bool b_bounded = false;            ///< |b_i| <= 1 for all i
  bool c_bounded = false;            ///< |c_i| <= 1
  bool difference_bounded = false;   ///< |b_i - c_i| <= 1
  HexagonClassification ball;        ///< unit ball of the 2D subspace
};

/// Builds a 2D subspace of the space whose unit ball is an affinely regular
/// hexagon, from a witness projection with volume ratio exactly 1 and a
/// non-parallelepiped image. Throws PreconditionError when the witness does
/// not qualify and DefectError if the construction's guarantees fail.
HexagonReport hexagonal_subspace(const PolyhedralSpace& space, const Projection& witness);

/// Looks for a witness among averages of coordinate projections at maximal
/// minors (all of them, then every pair, then every triple). Returns the
/// first average with ratio 1 whose image is not a parallelepiped.
std::optional<Projection> find_hexagon_witness(const PolyhedralSpace& space);

}  // namespace mvse
