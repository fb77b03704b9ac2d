#pragma once

// Test-only reference computations, written independently of the library's
// elimination and multiplication paths.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "tetrabox/matrix.hpp"

namespace oracle {

using tetrabox::Matrix;
using tetrabox::Rational;

// Leibniz expansion over all permutations; only for small n.
inline Rational leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Matrix naive_multiply(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

// det(x I - m)
inline Rational char_poly_at(const Matrix& m, const Rational& x) {
  Matrix w(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = (i == j ? x : Rational(0)) - m(i, j);
  return leibniz_det(w);
}

// Product over roots of (x - root) at x.
inline Rational poly_from_roots_at(const std::vector<Rational>& roots, const Rational& x) {
  Rational p = 1;
  for (const auto& r : roots) p *= x - r;
  return p;
}

// Entries drawn from small integers and halves, zero with probability ~1/3.
inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 2);
  std::uniform_int_distribution<int> zero(0, 2);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (zero(rng) != 0) {
        m(i, j) = Rational(num(rng), den(rng));
        m(i, j).canonicalize();
      }
  return m;
}

}  // namespace oracle
