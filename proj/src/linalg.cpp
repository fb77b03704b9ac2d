#include "tetrabox/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tetrabox/errors.hpp"
#include "tetrabox/kernels.hpp"

namespace tetrabox {

RrefResult rref(const Matrix& m) {
  RrefResult result{m, 0};
  result.rank = kernels::row_reduce(result.form);
  return result;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant: matrix is not square");
  Matrix w = m;
  const std::size_t n = w.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(w(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(pivot, j), w(col, j));
      det = -det;
    }
    det *= w(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(w(i, col)) == 0) continue;
      const Rational factor = w(i, col) / w(col, col);
      for (std::size_t j = col; j < n; ++j) w(i, j) -= factor * w(col, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n + i) = 1;
  }
  kernels::row_reduce(augmented);
  for (std::size_t i = 0; i < n; ++i)
    if (augmented(i, i) != 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = augmented(i, n + j);
  return inv;
}

Subspace Subspace::span(const Matrix& columns) {
  // Column echelon form of the columns is the transpose of the row echelon
  // form of the transpose.
  Matrix rows = columns.transpose();
  const std::size_t r = kernels::row_reduce(rows);
  Matrix basis(columns.rows(), r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < columns.rows(); ++i) basis(i, k) = rows(k, i);
  return Subspace(std::move(basis));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& vectors) {
  return span(Matrix::from_columns(ambient_dim, vectors));
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(Matrix(ambient_dim, 0)); }

Subspace Subspace::full(std::size_t ambient_dim) { return Subspace(Matrix::identity(ambient_dim)); }

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim()) throw DimensionError("Subspace::contains: vector length mismatch");
  // Reduce v against the echelon basis: each basis column has a leading 1 in
  // a pivot row where every other basis column is zero.
  std::vector<Rational> rest(v.begin(), v.end());
  std::size_t pivot = 0;
  for (std::size_t k = 0; k < dim(); ++k) {
    while (sgn(basis_(pivot, k)) == 0) ++pivot;
    const Rational c = rest[pivot];
    if (sgn(c) != 0)
      for (std::size_t i = pivot; i < ambient_dim(); ++i) rest[i] -= c * basis_(i, k);
  }
  return std::all_of(rest.begin(), rest.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionError("Subspace::contains: ambient dimension mismatch");
  for (std::size_t k = 0; k < other.dim(); ++k)
    if (!contains(other.vector(k))) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::size_t j = 0;
    while (sgn(r.form(i, j)) == 0) ++j;
    pivot_cols.push_back(j);
    is_pivot[j] = true;
  }
  std::vector<std::vector<Rational>> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[pivot_cols[i]] = -r.form(i, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vectors);
}

namespace {

void check_ambient(const Subspace& u, const Subspace& v, const char* what) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionError(std::string(what) + ": ambient dimensions " + std::to_string(u.ambient_dim()) + " and " +
                         std::to_string(v.ambient_dim()) + " differ");
}

}  // namespace

Subspace intersect(const Subspace& u, const Subspace& v) {
  check_ambient(u, v, "intersect");
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace::zero(n);
  // Solve U x - V y = 0; the intersection is spanned by the vectors U x.
  Matrix system(n, u.dim() + v.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < u.dim(); ++k) system(i, k) = u.basis()(i, k);
    for (std::size_t k = 0; k < v.dim(); ++k) system(i, u.dim() + k) = -v.basis()(i, k);
  }
  const Subspace solutions = kernel(system);
  Matrix coefficients(u.dim(), solutions.dim());
  for (std::size_t s = 0; s < solutions.dim(); ++s)
    for (std::size_t k = 0; k < u.dim(); ++k) coefficients(k, s) = solutions.basis()(k, s);
  return Subspace::span(u.basis() * coefficients);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  check_ambient(u, v, "sum");
  const std::size_t n = u.ambient_dim();
  Matrix both(n, u.dim() + v.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < u.dim(); ++k) both(i, k) = u.basis()(i, k);
    for (std::size_t k = 0; k < v.dim(); ++k) both(i, u.dim() + k) = v.basis()(i, k);
  }
  return Subspace::span(both);
}

Subspace image(const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient_dim()) throw DimensionError("image: matrix and subspace sizes differ");
  return Subspace::span(m * u.basis());
}

Subspace eigenspace(const Matrix& m, const Rational& lambda) {
  if (!m.is_square()) throw DimensionError("eigenspace: matrix is not square");
  return kernel(shifted(m, -lambda));
}

bool is_diagonalizable_with(const Matrix& m, std::span<const Rational> eigenvalues) {
  if (!m.is_square()) throw DimensionError("is_diagonalizable_with: matrix is not square");
  std::vector<Rational> sorted(eigenvalues.begin(), eigenvalues.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("is_diagonalizable_with: duplicate eigenvalues");
  std::size_t total = 0;
  for (const auto& lambda : eigenvalues) {
    total += eigenspace(m, lambda).dim();
    if (total > m.rows()) break;
  }
  return total == m.rows();
}

}  // namespace tetrabox
