#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tetrabox/classify.hpp"
#include "tetrabox/errors.hpp"

using namespace tetrabox;

namespace {

ModuleSpec spec(std::vector<Factor> factors, Rational alpha = 0, Rational alpha_star = 0) {
  return ModuleSpec{std::move(factors), alpha, alpha_star};
}

}  // namespace

TEST_CASE("irreducibility criterion") {
  CHECK(is_irreducible_criterion(spec({{1, 2}, {1, 3}})));
  CHECK_FALSE(is_irreducible_criterion(spec({{1, 2}, {2, ratio(1, 2)}})));
  CHECK_FALSE(is_irreducible_criterion(spec({{1, 1}})));
  CHECK_FALSE(is_irreducible_criterion(spec({{1, -1}})));
  CHECK_FALSE(is_irreducible_criterion(spec({{1, 2}, {1, 2}})));
  CHECK(is_irreducible_criterion(spec({{0, 1}})));
  CHECK(is_irreducible_criterion(spec({{0, 2}, {1, 3}})));
  CHECK(reducibility_reason(spec({{1, 1}})) == "reducible: a = ±1");
  CHECK_FALSE(reducibility_reason(spec({{1, 2}})).has_value());
  CHECK(reducibility_reason(spec({{1, 2}, {1, ratio(1, 2)}}))->starts_with("reducible: evaluation parameters"));
}

TEST_CASE("Burnside test") {
  CHECK(is_irreducible_burnside(build_from_spec(spec({{0, 1}}))));
  const OnsagerModule v2 = evaluation_module(1, 2);
  CHECK(is_irreducible_burnside(v2));
  // I, A, A*, A A* already have nonzero determinant as a 4x4 array.
  Matrix words(4, 4);
  const Matrix w[4] = {Matrix::identity(2), v2.a, v2.a_star, oracle::naive_multiply(v2.a, v2.a_star)};
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t e = 0; e < 4; ++e) words(k, e) = w[k](e / 2, e % 2);
  CHECK(oracle::leibniz_det(words) != 0);

  const OnsagerModule v1 = evaluation_module(1, 1);
  CHECK(oracle::naive_multiply(v1.a, v1.a) == Matrix::identity(2));
  const std::vector<Matrix> gens{v1.a, v1.a_star};
  CHECK(generated_algebra_dimension(gens, 4) == 2);
  CHECK_FALSE(is_irreducible_burnside(v1));
  CHECK_THROWS_AS(acts_irreducibly(Matrix::identity(3), Matrix::identity(3), 2), DimensionError);
}

TEST_CASE("equivalence") {
  CHECK(are_equivalent(spec({{1, 2}, {1, 3}}), spec({{1, 3}, {1, ratio(1, 2)}})));
  CHECK_FALSE(are_equivalent(spec({{1, 2}}), spec({{2, 2}})));
  CHECK(are_equivalent(spec({{2, 5}}), spec({{2, 5}})));
  CHECK_FALSE(are_equivalent(spec({{1, 2}}), spec({{1, 2}}, 1, 0)));
  CHECK(equivalence_key(spec({{0, 9}, {1, 3}})) == equivalence_key(spec({{1, ratio(1, 3)}})));
}

TEST_CASE("intertwiner search") {
  const OnsagerModule v2 = evaluation_module(1, 2);
  const auto self = find_intertwiner(v2, v2);
  REQUIRE(self.has_value());
  CHECK(oracle::leibniz_det(*self) != 0);

  const OnsagerModule vh = evaluation_module(1, ratio(1, 2));
  const auto s = find_intertwiner(v2, vh);
  REQUIRE(s.has_value());
  CHECK(oracle::leibniz_det(*s) != 0);
  CHECK(oracle::naive_multiply(*s, v2.a) == oracle::naive_multiply(vh.a, *s));
  CHECK(oracle::naive_multiply(*s, v2.a_star) == oracle::naive_multiply(vh.a_star, *s));

  CHECK_FALSE(find_intertwiner(v2, evaluation_module(1, 3)).has_value());
  CHECK_FALSE(find_intertwiner(v2, evaluation_module(2, 2)).has_value());
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(spec({{1, 2}, {1, 3}}), spec({{1, ratio(1, 2)}, {1, ratio(1, 3)}})));
  CHECK_FALSE(is_isomorphic(spec({{1, 2}, {1, 3}}), spec({{1, 2}, {1, 5}})));
  CHECK(is_isomorphic(spec({{2, 2}}), spec({{2, ratio(1, 2)}})));
  CHECK_THROWS_AS(is_isomorphic(spec({{1, 1}}), spec({{1, 2}})), ReducibleError);
  CHECK_THROWS_AS(is_isomorphic(spec({{1, 2}}, 1), spec({{1, 2}})), DomainError);
}

TEST_CASE("property: the key is invariant under permutation and inversion of factors") {
  std::mt19937 rng(41);
  const std::vector<Rational> params{2, 3, 5, -2, ratio(1, 2), ratio(-3, 7), ratio(5, 4)};
  for (int trial = 0; trial < 50; ++trial) {
    ModuleSpec s;
    for (std::size_t i = 0, k = 1 + rng() % 4; i < k; ++i)
      s.factors.push_back({rng() % 4, params[rng() % params.size()]});
    ModuleSpec t = s;
    std::shuffle(t.factors.begin(), t.factors.end(), rng);
    for (auto& f : t.factors)
      if (rng() % 2) f.a = reciprocal(f.a);
    CHECK(equivalence_key(s) == equivalence_key(t));
    CHECK(is_irreducible_criterion(s) == is_irreducible_criterion(t));
  }
}

TEST_CASE("property: criterion agrees with Burnside on small products") {
  const std::vector<Rational> params{2, 3, -1, 1, ratio(1, 2), ratio(1, 3)};
  for (const auto& a : params)
    for (const auto& b : params) {
      const ModuleSpec s = spec({{1, a}, {1, b}});
      CHECK(is_irreducible_criterion(s) == is_irreducible_burnside(build_from_spec(s)));
    }
}
