#include "mvse/core/matrix.hpp"

#include <cctype>

#include "mvse/core/errors.hpp"

namespace mvse {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-') {
    throw ParseError("core", "malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParseError("core", "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

int sign(const Rational& value) { return sgn(value); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw ShapeError("core", "dot product of vectors with different lengths");
  Rational s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector scaled(std::span<const Rational> v, const Rational& factor) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= factor;
  return out;
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw ShapeError("core", "vector sum of different lengths");
  Vector out(a.begin(), a.end());
  for (Index i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw ShapeError("core", "vector difference of different lengths");
  Vector out(a.begin(), a.end());
  for (Index i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Rational norm2(std::span<const Rational> v) { return dot(v, v); }

Matrix::Matrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("core", "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(Index n) {
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const Index cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (Index r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("core", "ragged row list");
    for (Index c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, Index rows) {
  Matrix m(rows, cols.size());
  for (Index c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw ShapeError("core", "column length does not match row count");
    for (Index r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row_vector(Index r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

Vector Matrix::column(Index c) const {
  Vector v(rows_);
  for (Index r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (Index c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (Index r = 0; r < rows_; ++r)
    for (Index c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_rows(std::span<const Index> idx) const {
  Matrix out(idx.size(), cols_);
  for (Index i = 0; i < idx.size(); ++i)
    for (Index c = 0; c < cols_; ++c) out(i, c) = (*this)(idx[i], c);
  return out;
}

Matrix Matrix::select_cols(std::span<const Index> idx) const {
  Matrix out(rows_, idx.size());
  for (Index r = 0; r < rows_; ++r)
    for (Index j = 0; j < idx.size(); ++j) out(r, j) = (*this)(r, idx[j]);
  return out;
}

Matrix Matrix::submatrix(std::span<const Index> row_idx, std::span<const Index> col_idx) const {
  Matrix out(row_idx.size(), col_idx.size());
  for (Index i = 0; i < row_idx.size(); ++i)
    for (Index j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
  return out;
}

Matrix Matrix::hconcat(const Matrix& other) const {
  if (other.rows_ != rows_) throw ShapeError("core", "horizontal concatenation needs equal row counts");
  Matrix out(rows_, cols_ + other.cols_);
  for (Index r = 0; r < rows_; ++r) {
    for (Index c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (Index c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw ShapeError("core", "matrix product dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  for (Index r = 0; r < rows_; ++r) {
    for (Index k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (Index c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

Vector Matrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw ShapeError("core", "matrix-vector dimension mismatch");
  Vector out(rows_);
  for (Index r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
  return out;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("core", "matrix sum dimension mismatch");
  Matrix out = *this;
  for (Index i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("core", "matrix difference dimension mismatch");
  Matrix out = *this;
  for (Index i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

}  // namespace mvse
