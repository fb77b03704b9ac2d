#include "tetrabox/matrix.hpp"

#include <cstdlib>
#include <string>

#include "tetrabox/errors.hpp"
#include "tetrabox/kernels.hpp"

namespace tetrabox {

std::size_t dimension_guard() {
  if (const char* env = std::getenv("TETRABOX_DIM_GUARD")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultDimensionGuard;
}

namespace {

void check_guard(std::size_t rows, std::size_t cols) {
  const std::size_t guard = dimension_guard();
  if (rows > guard || cols > guard)
    throw DimensionError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " exceeds the dimension guard of " + std::to_string(guard));
}

void check_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_guard(rows, cols);
  entries_.resize(rows * cols);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  check_guard(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (const auto& x : r) entries_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::vector<Rational> Matrix::column(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  check_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  check_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& x : entries_) x *= scalar;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= Rational(-1); }
Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::multiply(a, b); }
Matrix operator*(const Rational& s, Matrix m) { return m *= s; }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix shifted(Matrix a, const Rational& s) {
  if (!a.is_square()) throw DimensionError("shifted: matrix is not square");
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) += s;
  return a;
}

Matrix kronecker(const Matrix& a, const Matrix& b) { return kernels::kronecker(a, b); }

Matrix kronecker_sum(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square()) throw DimensionError("kronecker_sum: operands must be square");
  return kronecker(a, Matrix::identity(b.rows())) + kronecker(Matrix::identity(a.rows()), b);
}

std::vector<Rational> apply(const Matrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw DimensionError("apply: vector length mismatch");
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(r[j]) != 0 && sgn(v[j]) != 0) out[i] += r[j] * v[j];
  }
  return out;
}

}  // namespace tetrabox
