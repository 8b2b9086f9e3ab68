#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mvse/core/matrix.hpp"
#include "mvse/tumat/tumat.hpp"
#include "mvse/zonotope/zonotope.hpp"

namespace mvse {

/// Lattice spanned by the columns of an invertible d x d basis.
class Lattice {
 public:
  /// Throws PreconditionError when the basis is singular.
  static Lattice make(Matrix basis);

  const Matrix& basis() const noexcept { return basis_; }
  const Rational& determinant() const noexcept { return determinant_; }
  Index dim() const noexcept { return basis_.rows(); }

 private:
  Lattice(Matrix basis, Rational det) : basis_(std::move(basis)), determinant_(std::move(det)) {}
  Matrix basis_;
  Rational determinant_;
};

struct TileVerdict {
  bool passed = false;
  std::size_t samples_tested = 0;  ///< retained samples (not on any boundary)
  std::size_t discarded = 0;       ///< samples resampled because they hit a boundary
  std::optional<Vector> failure_point;
  std::size_t failure_count = 0;   ///< cover count at the failure point
  std::string trace_digest;        ///< FNV-1a over the retained sample coordinates
};

/// d(lattice) == vol(Z), exactly.
bool det_volume_check(const Zonotope& z, const Lattice& lattice);

/// Samples seeded rational points in [-radius, radius]^d and counts the
/// translates Z + v (v in the lattice) containing each point in their
/// interior. Points on a translate boundary are resampled. Passes iff every
/// retained point is covered exactly once. Stops at the first failure.
/// d must be 2 or 3.
TileVerdict tile_verify(const Zonotope& z, const Lattice& lattice, const Rational& radius, std::size_t samples,
                        std::uint64_t seed);

/// Search budget for lattice_search.
struct SearchBudget {
  std::size_t samples = 1000;
  Rational radius = 0;  ///< 0 selects a radius from the zonotope's extent
  std::uint64_t seed = 1;
  std::size_t max_vectors = 4096;  ///< cap on candidate vectors per coefficient pass
  std::size_t max_tuples = 2000000;  ///< cap on candidate d-tuples per pass
  std::size_t max_bases = 20000;   ///< cap on distinct lattices sent to tile_verify
};

/// First lattice (in a fixed candidate order) that passes det_volume_check
/// and tile_verify. Candidates are integer combinations sum c_i z_i of the
/// canonical generators: first c_i in {-2, 0, 2} (doubled facet centres),
/// then |c_i| <= 2, then |c_i| <= 3, each pass truncated by the budget.
/// Returns nullopt when nothing is found, which proves nothing.
std::optional<Lattice> lattice_search(const Zonotope& z, const SearchBudget& budget = {});

struct TilingReport {
  MembershipResult membership;
  std::optional<Lattice> lattice;
  std::optional<TileVerdict> verdict;
  bool det_volume_ok = false;

  bool member() const { return std::holds_alternative<TUWitness>(membership); }
  bool tiles() const { return verdict && verdict->passed; }
};

/// Membership test, then (for members) lattice search and verification.
TilingReport td_tiling_pipeline(const Zonotope& z, const SearchBudget& budget = {});

/// Default sampling radius: twice the largest coordinate extent of Z.
Rational default_radius(const Zonotope& z);

/// Hermite normal form of the integer lattice L * basis, with L the lcm of
/// the denominators; used to recognise identical lattices.
Matrix lattice_key(const Matrix& basis);

}  // namespace mvse
