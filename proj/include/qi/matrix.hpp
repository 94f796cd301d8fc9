#pragma once

#include <cstddef>
#include <vector>

#include "qi/scalar.hpp"

namespace qi {

/// Dense row-major matrix over a single Field. Entries are 0-based.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix zero(std::size_t rows, std::size_t cols, Field f) { return Matrix(rows, cols, f); }
  static Matrix identity(std::size_t n, Field f);
  /// J(n) = [[0, E], [-E, 0]] for even n.
  static Matrix symplectic_unit(std::size_t n, Field f);
  static Matrix diagonal(const std::vector<Scalar>& d);
  static Matrix from_ints(const std::vector<std::vector<long long>>& rows, Field f);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const Field& field() const noexcept { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;
  /// Reduces rational entries into `f` (identity when the fields match).
  Matrix convert(const Field& f) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  Matrix operator-() const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

}  // namespace qi
