#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tetrabox/matrix.hpp"

namespace tetrabox {

struct RrefResult {
  Matrix form;
  std::size_t rank = 0;
};

/// Reduced row-echelon form with exact pivots.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// A subspace of K^n held as the columns of a matrix in reduced column-echelon
/// form (leading entries 1, zeros beside every pivot). Two Subspace values
/// compare equal exactly when they describe the same space.
class Subspace {
 public:
  Subspace() = default;

  /// Canonical span of the columns of `columns`.
  static Subspace span(const Matrix& columns);
  static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& vectors);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Rational> vector(std::size_t k) const { return basis_.column(k); }

  bool contains(std::span<const Rational> v) const;
  /// this ⊇ other
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

Subspace kernel(const Matrix& m);
/// Throws DimensionError on an ambient-dimension mismatch.
Subspace intersect(const Subspace& u, const Subspace& v);
/// Throws DimensionError on an ambient-dimension mismatch.
Subspace sum(const Subspace& u, const Subspace& v);
/// m * u
Subspace image(const Matrix& m, const Subspace& u);
/// {v : m v = lambda v}; throws DimensionError for non-square m.
Subspace eigenspace(const Matrix& m, const Rational& lambda);

/// True iff the eigenspaces for the listed (distinct) eigenvalues fill the space.
/// Throws DomainError on duplicates.
bool is_diagonalizable_with(const Matrix& m, std::span<const Rational> eigenvalues);

}  // namespace tetrabox
