#include "mvse/core/minors.hpp"

#include <algorithm>

#include "mvse/core/errors.hpp"
#include "mvse/core/linalg.hpp"
#include "mvse/core/parallel.hpp"

namespace mvse {

namespace {

std::size_t small_binomial(Index n, Index k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (Index i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

constexpr std::size_t kParallelMinorThreshold = 256;

}  // namespace

Integer binomial(Index n, Index k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<Subset> subsets(Index n, Index k) {
  std::vector<Subset> out;
  if (k > n) return out;
  Subset s(k);
  for (Index i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    Index i = k;
    while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (Index j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

Index subset_rank(const Subset& s, Index n) {
  const Index k = s.size();
  Index rank = 0;
  Index prev = 0;
  for (Index i = 0; i < k; ++i) {
    for (Index v = (i == 0 ? 0 : prev + 1); v < s[i]; ++v) rank += small_binomial(n - v - 1, k - i - 1);
    prev = s[i];
  }
  return rank;
}

Subset complement(const Subset& s, Index n) {
  Subset out;
  out.reserve(n - s.size());
  Index j = 0;
  for (Index i = 0; i < n; ++i) {
    if (j < s.size() && s[j] == i) {
      ++j;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

Rational PluckerVector::max_abs() const {
  Rational best = 0;
  for (const auto& v : values) best = std::max(best, abs(v));
  return best;
}

PluckerVector plucker(const Matrix& m) {
  if (m.rows() < m.cols()) throw ShapeError("core", "Plucker vector needs rows >= cols");
  PluckerVector out{m.rows(), m.cols(), {}};
  const auto all = subsets(m.rows(), m.cols());
  out.values.resize(all.size());
  auto minor = [&](std::size_t i) { out.values[i] = det(m.select_rows(all[i])); };
  if (all.size() >= kParallelMinorThreshold) {
    parallel_for(all.size(), minor);
  } else {
    for (std::size_t i = 0; i < all.size(); ++i) minor(i);
  }
  return out;
}

int laplace_sign(const Subset& s, Index m) {
  Index total = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s[i] >= m || (i > 0 && s[i] <= s[i - 1])) throw PreconditionError("core", "invalid subset index");
    total += s[i] - i;
  }
  return total % 2 == 0 ? 1 : -1;
}

Rational laplace_expand(const Matrix& f, const Matrix& g) {
  if (f.rows() != g.rows() || f.cols() + g.cols() != f.rows()) {
    throw ShapeError("core", "Laplace expansion needs an m x d and an m x (m-d) block");
  }
  const Index m = f.rows();
  const Index d = f.cols();
  Rational total = 0;
  for (const auto& s : subsets(m, d)) {
    const Rational u = det(f.select_rows(s));
    if (u == 0) continue;
    const Rational v = det(g.select_rows(complement(s, m)));
    total += laplace_sign(s, m) * u * v;
  }
  return total;
}

Rational cauchy_binet(const PluckerVector& u, const PluckerVector& w) {
  if (u.m != w.m || u.d != w.d || u.values.size() != w.values.size()) {
    throw ShapeError("core", "Plucker vectors of different shapes");
  }
  Rational total = 0;
  for (Index i = 0; i < u.values.size(); ++i) total += u.values[i] * w.values[i];
  return total;
}

ComplementaryReport complementary_check(const Matrix& q, Index d) {
  if (!q.square()) throw ShapeError("core", "complementary check needs a square matrix");
  const Index m = q.rows();
  if (d > m) throw ShapeError("core", "split column count exceeds matrix size");
  if (q * q.transpose() != Matrix::identity(m)) {
    throw PreconditionError("core", "matrix is not orthogonal (Q * Q^T != I)");
  }
  Subset first(d), rest(m - d);
  for (Index i = 0; i < d; ++i) first[i] = i;
  for (Index i = d; i < m; ++i) rest[i - d] = i;
  const Matrix f = q.select_cols(first);
  const Matrix g = q.select_cols(rest);

  ComplementaryReport report;
  report.sigma = sign(det(q));
  report.holds = true;
  for (const auto& s : subsets(m, d)) {
    const Rational w = det(f.select_rows(s));
    const Rational v = det(g.select_rows(complement(s, m)));
    report.sum_w_squared += w * w;
    report.sum_v_squared += v * v;
    if (w != report.sigma * laplace_sign(s, m) * v) report.holds = false;
  }
  if (report.sum_w_squared != 1 || report.sum_v_squared != 1) report.holds = false;
  return report;
}

PerturbationReport det_perturb_bound(const std::vector<Vector>& xs, const Vector& z,
                                     const Rational& l, const Rational& bound) {
  const Index d = xs.size();
  if (d == 0) throw ShapeError("core", "empty vector family");
  for (const auto& x : xs) {
    if (x.size() != d) throw ShapeError("core", "vectors must have dimension equal to their count");
  }
  if (z.size() != d) throw ShapeError("core", "perturbed vector has the wrong dimension");
  if (l < 0 || bound < 0) throw PreconditionError("core", "norm bounds must be nonnegative");
  for (Index i = 1; i < d; ++i) {
    if (norm2(xs[i]) > bound * bound) {
      throw PreconditionError("core", "|x_" + std::to_string(i + 1) + "| exceeds the norm bound");
    }
  }
  if (norm2(sub(z, xs[0])) > l * l) throw PreconditionError("core", "|z - x_1| exceeds l");

  const Matrix original = Matrix::from_columns(xs, d);
  auto moved_cols = xs;
  moved_cols[0] = z;
  const Matrix moved = Matrix::from_columns(moved_cols, d);

  PerturbationReport report;
  report.lhs = abs(det(moved) - det(original));
  report.rhs = l;
  for (Index i = 1; i < d; ++i) report.rhs *= bound;
  report.holds = report.lhs <= report.rhs;
  return report;
}

}  // namespace mvse
