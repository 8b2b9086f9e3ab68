#include "mvse/core/random.hpp"

#include <limits>

#include "mvse/core/errors.hpp"

namespace mvse {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PreconditionError("core", "empty random range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<std::int64_t>(x % span);
}

Rational Rng::rational(std::int64_t max_num, std::int64_t max_den) {
  const std::int64_t p = uniform(-max_num, max_num);
  const std::int64_t q = uniform(1, max_den);
  Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

Vector Rng::rational_vector(Index n, std::int64_t max_num, std::int64_t max_den) {
  Vector v(n);
  for (auto& x : v) x = rational(max_num, max_den);
  return v;
}

Matrix Rng::rational_matrix(Index rows, Index cols, std::int64_t max_num, std::int64_t max_den) {
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = rational(max_num, max_den);
  return m;
}

Rational Rng::grid_point(const Rational& radius, std::int64_t steps) {
  const std::int64_t k = uniform(0, steps);
  Rational t(static_cast<long>(2 * k - steps), static_cast<unsigned long>(steps));
  t.canonicalize();
  return radius * t;
}

}  // namespace mvse
