#include "tetrabox/kernels.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "tetrabox/errors.hpp"

namespace tetrabox::kernels {

namespace {

void check_product_shape(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
}

// c_i += a_ik * b_k for one output row.
void accumulate_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i, mpq_class& scratch) {
  auto out = c.row(i);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Rational& aik = a(i, k);
    if (sgn(aik) == 0) continue;
    auto bk = b.row(k);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (sgn(bk[j]) == 0) continue;
      mpq_mul(scratch.get_mpq_t(), aik.get_mpq_t(), bk[j].get_mpq_t());
      mpq_add(out[j].get_mpq_t(), out[j].get_mpq_t(), scratch.get_mpq_t());
    }
  }
}

void kronecker_block_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t ia) {
  for (std::size_t ja = 0; ja < a.cols(); ++ja) {
    const Rational& s = a(ia, ja);
    if (sgn(s) == 0) continue;
    for (std::size_t ib = 0; ib < b.rows(); ++ib)
      for (std::size_t jb = 0; jb < b.cols(); ++jb)
        if (sgn(b(ib, jb)) != 0) c(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
  }
}

// Row `target` -= factor * row `pivot_row`, touching columns >= col only.
void eliminate_row(Matrix& m, std::size_t target, std::size_t pivot_row, std::size_t col, mpq_class& scratch) {
  const Rational factor = m(target, col);
  if (sgn(factor) == 0) return;
  auto dst = m.row(target);
  auto src = m.row(pivot_row);
  for (std::size_t j = col; j < m.cols(); ++j) {
    if (sgn(src[j]) == 0) continue;
    mpq_mul(scratch.get_mpq_t(), factor.get_mpq_t(), src[j].get_mpq_t());
    mpq_sub(dst[j].get_mpq_t(), dst[j].get_mpq_t(), scratch.get_mpq_t());
  }
}

// Swaps the first row at or below `row` with a nonzero entry in `col` into place.
bool bring_pivot(Matrix& m, std::size_t row, std::size_t col) {
  for (std::size_t i = row; i < m.rows(); ++i) {
    if (sgn(m(i, col)) != 0) {
      if (i != row)
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(i, j), m(row, j));
      return true;
    }
  }
  return false;
}

void normalize_pivot_row(Matrix& m, std::size_t row, std::size_t col) {
  const Rational inv = Rational(1) / m(row, col);
  for (std::size_t j = col; j < m.cols(); ++j)
    if (sgn(m(row, j)) != 0) m(row, j) *= inv;
}

}  // namespace

namespace serial {

Matrix multiply(const Matrix& a, const Matrix& b) {
  check_product_shape(a, b);
  Matrix c(a.rows(), b.cols());
  mpq_class scratch;
  for (std::size_t i = 0; i < a.rows(); ++i) accumulate_row(a, b, c, i, scratch);
  return c;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) kronecker_block_row(a, b, c, ia);
  return c;
}

std::size_t row_reduce(Matrix& m) {
  std::size_t rank = 0;
  mpq_class scratch;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    if (!bring_pivot(m, rank, col)) continue;
    normalize_pivot_row(m, rank, col);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != rank) eliminate_row(m, i, rank, col, scratch);
    ++rank;
  }
  return rank;
}

}  // namespace serial

Matrix multiply(const Matrix& a, const Matrix& b) {
  check_product_shape(a, b);
  Matrix c(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
  const bool wide = a.rows() * a.cols() * b.cols() >= kParallelCutoff;
#pragma omp parallel if (wide)
  {
    mpq_class scratch;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) accumulate_row(a, b, c, static_cast<std::size_t>(i), scratch);
  }
  return c;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
  const bool wide = c.rows() * c.cols() >= kParallelCutoff;
#pragma omp parallel for schedule(static) if (wide)
  for (std::ptrdiff_t ia = 0; ia < rows; ++ia) kronecker_block_row(a, b, c, static_cast<std::size_t>(ia));
  return c;
}

std::size_t row_reduce(Matrix& m) {
  std::size_t rank = 0;
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  const bool wide = m.rows() * m.cols() >= kParallelCutoff;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    if (!bring_pivot(m, rank, col)) continue;
    normalize_pivot_row(m, rank, col);
    const auto pivot = static_cast<std::ptrdiff_t>(rank);
#pragma omp parallel if (wide)
    {
      mpq_class scratch;
#pragma omp for schedule(static)
      for (std::ptrdiff_t i = 0; i < rows; ++i)
        if (i != pivot) eliminate_row(m, static_cast<std::size_t>(i), rank, col, scratch);
    }
    ++rank;
  }
  return rank;
}

}  // namespace tetrabox::kernels
