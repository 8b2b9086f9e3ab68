#pragma once

#include <cstdint>
#include <random>

#include "mvse/core/matrix.hpp"

namespace mvse {

/// Seeded generator with a portable integer mapping. std::mt19937_64 output
/// is fixed by the standard; the distributions are not, so integer draws use
/// rejection sampling on the raw output. Same seed, same stream, on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(std::int64_t max_num, std::int64_t max_den);
  Vector rational_vector(Index n, std::int64_t max_num, std::int64_t max_den);
  Matrix rational_matrix(Index rows, Index cols, std::int64_t max_num, std::int64_t max_den);
  /// Uniform value in [-radius, radius] on the grid radius * (2k/steps - 1).
  Rational grid_point(const Rational& radius, std::int64_t steps);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mvse
