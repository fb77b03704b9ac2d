#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tetrabox/errors.hpp"
#include "tetrabox/onsager.hpp"

using namespace tetrabox;

namespace {

ModuleSpec spec(std::vector<Factor> factors, Rational alpha = 0, Rational alpha_star = 0) {
  return ModuleSpec{std::move(factors), alpha, alpha_star};
}

// Random spec with at most three factors and total dimension at most 24.
ModuleSpec random_spec(std::mt19937& rng) {
  static const std::vector<Rational> params{2, 3, -2, ratio(1, 2), ratio(-1, 3), 5, ratio(2, 3)};
  ModuleSpec s;
  std::size_t dim = 1;
  const std::size_t count = 1 + rng() % 3;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % 3;
    if (dim * (n + 1) > 24) break;
    dim *= n + 1;
    s.factors.push_back({n, params[rng() % params.size()]});
  }
  return s;
}

}  // namespace

TEST_CASE("sl2 weight basis for n = 2") {
  const Sl2Triple t = sl2_irreducible(2);
  CHECK(t.h == Matrix::diagonal({2, 0, -2}));
  CHECK(t.e == Matrix{{0, 2, 0}, {0, 0, 2}, {0, 0, 0}});
  CHECK(t.f == Matrix{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
}

TEST_CASE("sl2 brackets hold for n = 0..10") {
  for (std::size_t n = 0; n <= 10; ++n) {
    const Sl2Triple t = sl2_irreducible(n);
    CHECK(t.satisfies_brackets());
    CHECK(oracle::naive_multiply(t.e, t.f) - oracle::naive_multiply(t.f, t.e) == t.h);
  }
}

TEST_CASE("two-dimensional evaluation module") {
  const OnsagerModule m = evaluation_module(1, 2);
  CHECK(m.a == Matrix{{0, 1}, {1, 0}});
  CHECK(m.a_star == Matrix{{0, 2}, {ratio(1, 2), 0}});
  REQUIRE(m.type.has_value());
  CHECK(*m.type == ModuleType{1, 0, 0});
  CHECK(satisfies_dolan_grady(m.a, m.a_star));
}

TEST_CASE("tensor product of V(2) and V(3) has spectrum {2,0,0,-2}") {
  const OnsagerModule m = build_from_spec(spec({{1, 2}, {1, 3}}));
  CHECK(m.dim() == 4);
  for (int x = -4; x <= 4; ++x) {
    CHECK(oracle::char_poly_at(m.a, x) == oracle::poly_from_roots_at({2, 0, 0, -2}, x));
    CHECK(oracle::char_poly_at(m.a_star, x) == oracle::poly_from_roots_at({2, 0, 0, -2}, x));
  }
  CHECK(*m.type == ModuleType{2, 0, 0});
  CHECK(satisfies_dolan_grady(m.a, m.a_star));
}

TEST_CASE("kronecker-sum convention puts the first factor in the outer index") {
  const OnsagerModule m1 = evaluation_module(1, 2), m2 = evaluation_module(2, 3);
  const OnsagerModule t = tensor(m1, m2);
  CHECK(t.a == kronecker(m1.a, Matrix::identity(3)) + kronecker(Matrix::identity(2), m2.a));
  CHECK_FALSE(t.type.has_value());
}

TEST_CASE("type shift") {
  const OnsagerModule m = build_from_spec(spec({{2, 2}}, 1, ratio(-1, 2)));
  REQUIRE(m.type.has_value());
  CHECK(*m.type == ModuleType{2, 1, ratio(-1, 2)});
  for (int x = -3; x <= 3; ++x)
    CHECK(oracle::char_poly_at(m.a, x) == oracle::poly_from_roots_at({3, 1, -1}, x));
  const OnsagerModule n = normalize_type(m);
  CHECK(module_type(n) == ModuleType{2, 0, 0});
  CHECK(n.a == evaluation_module(2, 2).a);
}

TEST_CASE("module_type rejects mismatched or non-arithmetic spectra") {
  OnsagerModule bad{Matrix{{0, 2}, {1, 0}}, Matrix{{0, 1}, {1, 0}}, std::nullopt};
  CHECK_THROWS_AS(module_type(bad), ModuleTypeError);
  OnsagerModule diam{Matrix::diagonal({1, -1, 1}), Matrix::diagonal({2, 0, -2}), std::nullopt};
  CHECK_THROWS_AS(module_type(diam), ModuleTypeError);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(spec({}).validate(), DomainError);
  CHECK_THROWS_AS(spec({{1, 0}}).validate(), DomainError);
  CHECK_THROWS_AS(build_from_spec(spec({{1, 0}})), DomainError);
  CHECK_NOTHROW(spec({{0, 7}}).validate());
}

TEST_CASE("trivial factor is the one-dimensional module") {
  const OnsagerModule m = build_from_spec(spec({{0, 5}}));
  CHECK(m.dim() == 1);
  CHECK(m.a.is_zero());
  CHECK(*m.type == ModuleType{0, 0, 0});
}

TEST_CASE("property: built modules satisfy Dolan-Grady and have diameter equal to the sum of n") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const ModuleSpec s = random_spec(rng);
    const OnsagerModule m = build_from_spec(s);
    std::size_t dim = 1, diam = 0;
    for (const auto& f : s.factors) dim *= f.n + 1, diam += f.n;
    CHECK(m.dim() == dim);
    CHECK(s.dimension() == dim);
    CHECK(s.diameter() == diam);
    CHECK(m.type->diameter == diam);
    CHECK(m.type->is_zero_type());
    CHECK(dolan_grady_residual(m.a, m.a_star).is_zero());
    CHECK(dolan_grady_residual(m.a_star, m.a).is_zero());
  }
}

TEST_CASE("property: a generic pair breaks Dolan-Grady") {
  std::mt19937 rng(37);
  int broken = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = oracle::random_matrix(rng, 3, 3), b = oracle::random_matrix(rng, 3, 3);
    const Matrix r = dolan_grady_residual(a, b);
    const Matrix ab = oracle::naive_multiply(a, b) - oracle::naive_multiply(b, a);
    Matrix c = ab;
    for (int k = 0; k < 2; ++k) c = oracle::naive_multiply(a, c) - oracle::naive_multiply(c, a);
    CHECK(r == c - Rational(4) * ab);
    broken += r.is_zero() ? 0 : 1;
  }
  CHECK(broken > 10);
}
