#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tetrabox/rational.hpp"

namespace tetrabox {

inline constexpr std::size_t kDefaultDimensionGuard = 4096;

/// Largest admissible row or column count. TETRABOX_DIM_GUARD overrides the default.
std::size_t dimension_guard();

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(std::span<const Rational> entries);
  static Matrix diagonal(std::initializer_list<Rational> entries) {
    return diagonal(std::span<const Rational>(entries.begin(), entries.size()));
  }
  /// Columns taken from the given vectors, which must share a length.
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  std::span<Rational> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  std::vector<Rational> column(std::size_t j) const;
  std::span<const Rational> entries() const { return entries_; }

  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, Matrix m);

/// AB - BA
Matrix commutator(const Matrix& a, const Matrix& b);
/// a + s*I
Matrix shifted(Matrix a, const Rational& s);
Matrix kronecker(const Matrix& a, const Matrix& b);
/// a (x) I + I (x) b, the action of a Lie algebra element on a tensor product.
Matrix kronecker_sum(const Matrix& a, const Matrix& b);

std::vector<Rational> apply(const Matrix& m, std::span<const Rational> v);

}  // namespace tetrabox
