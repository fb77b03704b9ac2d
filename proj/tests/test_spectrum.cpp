#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tetrabox/spectrum.hpp"

using namespace tetrabox;

namespace {

bool annihilates(const std::vector<Rational>& coeffs, const Matrix& m) {
  Matrix acc = Matrix::zero(m.rows(), m.cols());
  Matrix power = Matrix::identity(m.rows());
  for (const auto& c : coeffs) {
    acc += c * power;
    power = oracle::naive_multiply(power, m);
  }
  return acc.is_zero();
}

}  // namespace

TEST_CASE("minimal polynomial examples") {
  CHECK(minimal_polynomial(Matrix{{0, 1}, {1, 0}}) == std::vector<Rational>{-1, 0, 1});
  CHECK(minimal_polynomial(Matrix::identity(3)) == std::vector<Rational>{-1, 1});
  CHECK(minimal_polynomial(Matrix{{1, 1}, {0, 1}}) == std::vector<Rational>{1, -2, 1});
  CHECK(minimal_polynomial(Matrix::zero(2, 2)) == std::vector<Rational>{0, 1});
}

TEST_CASE("rational diagonal spectrum") {
  CHECK(rational_diagonal_spectrum(Matrix{{0, 1}, {1, 0}}) == std::vector<Rational>{1, -1});
  // sqrt(2) is not rational
  CHECK_FALSE(rational_diagonal_spectrum(Matrix{{0, 2}, {1, 0}}).has_value());
  // rotation has no real eigenvalues
  CHECK_FALSE(rational_diagonal_spectrum(Matrix{{0, -1}, {1, 0}}).has_value());
  CHECK_FALSE(rational_diagonal_spectrum(Matrix{{1, 1}, {0, 1}}).has_value());
  const Matrix frac = Matrix::diagonal({ratio(1, 3), ratio(-5, 2), ratio(1, 3)});
  CHECK(rational_diagonal_spectrum(frac) == std::vector<Rational>{ratio(1, 3), ratio(-5, 2)});
}

TEST_CASE("arithmetic spectrum") {
  const auto s = arithmetic_spectrum(Matrix::diagonal({3, 1, -1, 1}));
  REQUIRE(s.has_value());
  CHECK(s->top == 3);
  CHECK(s->d == 2);
  CHECK(s->values() == std::vector<Rational>{3, 1, -1});
  CHECK_FALSE(arithmetic_spectrum(Matrix::diagonal({3, -1})).has_value());
  CHECK(is_arithmetic_step_two({ratio(5, 2), ratio(1, 2)}));
  CHECK_FALSE(is_arithmetic_step_two({2, 1}));
  CHECK(is_arithmetic_step_two({7}));
}

TEST_CASE("property: similar diagonal matrices give back their eigenvalues") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> val(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<Rational> diag(n);
    for (auto& v : diag) v = Rational(val(rng), 1 + static_cast<int>(rng() % 3)), v.canonicalize();
    Matrix p = oracle::random_matrix(rng, n, n);
    while (oracle::leibniz_det(p) == 0) p = oracle::random_matrix(rng, n, n);
    // p^-1 via adjugate-free route: solve with the library, check with the oracle.
    Matrix pinv(n, n);
    {
      const Rational det = oracle::leibniz_det(p);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Matrix minor(n - 1 == 0 ? 1 : n - 1, n - 1 == 0 ? 1 : n - 1);
          Rational cof = 1;
          if (n > 1) {
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
              if (r == j) continue;
              for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == i) continue;
                minor(rr, cc++) = p(r, c);
              }
              ++rr;
            }
            cof = oracle::leibniz_det(minor);
          }
          pinv(i, j) = ((i + j) % 2 ? -cof : cof) / det;
        }
    }
    const Matrix m = oracle::naive_multiply(oracle::naive_multiply(p, Matrix::diagonal(diag)), pinv);
    std::vector<Rational> expected = diag;
    std::sort(expected.begin(), expected.end(), std::greater<>());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    CHECK(rational_diagonal_spectrum(m) == expected);
    const auto mu = minimal_polynomial(m);
    CHECK(mu.size() == expected.size() + 1);
    CHECK(annihilates(mu, m));
    for (const auto& root : expected) CHECK(oracle::char_poly_at(m, root) == 0);
    CHECK(mu.back() == 1);
  }
}
