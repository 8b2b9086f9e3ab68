#include "mvse/core/linalg.hpp"

#include <utility>

#include "mvse/core/errors.hpp"

namespace mvse {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<Index> rref(Matrix& a) {
  std::vector<Index> pivots;
  Index lead_row = 0;
  for (Index c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    Index p = lead_row;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead_row) {
      for (Index k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(lead_row, k));
    }
    const Rational inv = 1 / a(lead_row, c);
    for (Index k = c; k < a.cols(); ++k) a(lead_row, k) *= inv;
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (Index k = c; k < a.cols(); ++k) a(r, k) -= f * a(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

}  // namespace

Rational det(const Matrix& m) {
  if (!m.square()) throw ShapeError("core", "determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Matrix a = m;
  Rational result = 1;
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (Index k = c; k < n; ++k) std::swap(a(p, k), a(c, k));
      result = -result;
    }
    const Rational& piv = a(c, c);
    result *= piv;
    for (Index r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      const Rational f = a(r, c) / piv;
      for (Index k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return result;
}

Index rank(const Matrix& m) {
  Matrix a = m;
  return rref(a).size();
}

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw ShapeError("core", "inverse of a non-square matrix");
  const Index n = m.rows();
  Matrix aug = m.hconcat(Matrix::identity(n));
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw PreconditionError("core", "matrix is singular");
  Matrix inv(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<Index> independent_columns(const Matrix& m) {
  Matrix a = m;
  return rref(a);
}

std::vector<Index> independent_rows(const Matrix& m) { return independent_columns(m.transpose()); }

Matrix left_null_space(const Matrix& m) {
  // w * m = 0  <=>  m^T w^T = 0: null space of m^T.
  Matrix a = m.transpose();
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (Index p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (Index i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  Matrix out(basis.size(), m.rows());
  for (Index r = 0; r < basis.size(); ++r)
    for (Index c = 0; c < m.rows(); ++c) out(r, c) = basis[r][c];
  return out;
}

Vector solve(const Matrix& basis, std::span<const Rational> v) {
  if (!basis.square() || basis.rows() != v.size()) throw ShapeError("core", "solve dimension mismatch");
  const Index n = basis.rows();
  Matrix aug(n, n + 1);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) aug(r, c) = basis(r, c);
    aug(r, n) = v[r];
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw PreconditionError("core", "basis is singular");
  Vector x(n);
  for (Index r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

}  // namespace mvse
