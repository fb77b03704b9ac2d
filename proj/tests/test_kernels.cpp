#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tetrabox/errors.hpp"
#include "tetrabox/kernels.hpp"

using namespace tetrabox;

TEST_CASE("openmp multiply matches the serial reference and the naive oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + rng() % 24, k = 1 + rng() % 24, c = 1 + rng() % 24;
    const Matrix a = oracle::random_matrix(rng, r, k);
    const Matrix b = oracle::random_matrix(rng, k, c);
    const Matrix parallel = kernels::multiply(a, b);
    CHECK(parallel == kernels::serial::multiply(a, b));
    CHECK(parallel == oracle::naive_multiply(a, b));
  }
}

TEST_CASE("openmp kronecker matches the serial reference") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = oracle::random_matrix(rng, 1 + rng() % 9, 1 + rng() % 9);
    const Matrix b = oracle::random_matrix(rng, 1 + rng() % 9, 1 + rng() % 9);
    const Matrix k = kernels::kronecker(a, b);
    CHECK(k == kernels::serial::kronecker(a, b));
    CHECK(k.rows() == a.rows() * b.rows());
    CHECK(k(a.rows() * b.rows() - 1, 0) == a(a.rows() - 1, 0) * b(b.rows() - 1, 0));
  }
}

TEST_CASE("openmp row reduction matches the serial reference") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + rng() % 40, c = 1 + rng() % 40;
    Matrix a = oracle::random_matrix(rng, r, c);
    // Force rank deficiency in half the cases.
    if (trial % 2 == 0 && r > 2)
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) - Rational(3) * a(1, j);
    Matrix s = a;
    const std::size_t rank_p = kernels::row_reduce(a);
    const std::size_t rank_s = kernels::serial::row_reduce(s);
    CHECK(rank_p == rank_s);
    CHECK(a == s);
  }
}

TEST_CASE("multiply rejects mismatched shapes") {
  CHECK_THROWS_AS(kernels::multiply(Matrix(2, 3), Matrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(kernels::serial::multiply(Matrix(2, 3), Matrix(2, 3)), DimensionError);
}
