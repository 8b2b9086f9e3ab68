#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mvse {

/// Exact rational scalar. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;
using Index = std::size_t;

/// Parses "p", "-p" or "p/q" (q != 0) into canonical form.
Rational parse_rational(std::string_view text);
/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Rational abs(const Rational& value);
int sign(const Rational& value);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector scaled(std::span<const Rational> v, const Rational& factor);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector sub(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);
/// Squared Euclidean norm.
Rational norm2(std::span<const Rational> v);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Index rows, Index cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(Index n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols, Index rows);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(Index r, Index c) { return data_[r * cols_ + c]; }
  const Rational& operator()(Index r, Index c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(Index r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(Index r) const;
  Vector column(Index c) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  Matrix select_rows(std::span<const Index> idx) const;
  Matrix select_cols(std::span<const Index> idx) const;
  Matrix submatrix(std::span<const Index> row_idx, std::span<const Index> col_idx) const;
  /// [this other], same row count.
  Matrix hconcat(const Matrix& other) const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(std::span<const Rational> v) const;
  Matrix operator*(const Rational& s) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const = default;

  const std::vector<Rational>& data() const noexcept { return data_; }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace mvse
