#include "doctest.h"
#include "oracles.hpp"
#include "tetrabox/errors.hpp"
#include "tetrabox/spectrum.hpp"
#include "tetrabox/tetra.hpp"

using namespace tetrabox;

namespace {

OnsagerModule module(std::vector<Factor> factors, Rational alpha = 0, Rational alpha_star = 0) {
  return build_from_spec(ModuleSpec{std::move(factors), alpha, alpha_star});
}

}  // namespace

TEST_CASE("pair tables") {
  CHECK(ordered_pairs().size() == 12);
  CHECK(unordered_pairs().size() == 6);
  CHECK(pair_name(ordered_pairs()[3]) == "10");
  CHECK(pair_name(ordered_pairs().back()) == "32");
}

TEST_CASE("V(2): x01 and x23 are the generators and x02 is assembled from the flags") {
  const OnsagerModule v2 = evaluation_module(1, 2);
  const TetraModule t = build_tetra(v2);
  CHECK(t(0, 1) == Matrix{{0, 1}, {1, 0}});
  CHECK(t(2, 3) == Matrix{{0, 2}, {ratio(1, 2), 0}});
  // P has columns (1,-1) for -1 and (-2,1) for +1.
  const Matrix p{{1, -2}, {-1, 1}};
  const Matrix p_inv{{-1, -2}, {-1, -1}};
  CHECK(oracle::naive_multiply(p, p_inv) == Matrix::identity(2));
  const Matrix x02 = oracle::naive_multiply(oracle::naive_multiply(p, Matrix::diagonal({-1, 1})), p_inv);
  CHECK(x02 == Matrix{{3, 4}, {-2, -3}});
  CHECK(t(0, 2) == x02);
  CHECK(t(2, 0) == -x02);
}

TEST_CASE("relations hold on built modules") {
  for (const auto& factors : std::vector<std::vector<Factor>>{{{0, 1}}, {{1, 2}}, {{1, 2}, {1, 3}}, {{2, 3}}}) {
    const TetraModule t = build_tetra(module(factors));
    const Report r = verify_relations(t);
    CHECK(r.entries.size() == 6 + 24 + 24);
    CHECK(r.all_pass());
    CHECK(verify_action_table(t).all_pass());
    CHECK(flag_independence_check(t));
    CHECK(shift_lemma_report(t).all_pass());
    CHECK(pairwise_irreducibility_report(t).all_pass());
  }
}

TEST_CASE("trivial module gives zero generators") {
  const TetraModule t = build_tetra(module({{0, 1}}));
  for (const auto& p : ordered_pairs()) CHECK(t.x.at(p) == Matrix::zero(1, 1));
  CHECK(roundtrip_uniqueness(module({{0, 1}})));
}

TEST_CASE("tampering with x01 is reported") {
  TetraModule t = build_tetra(evaluation_module(1, 2));
  t.x.at({0, 1}) += Matrix::identity(2);
  const Report r = verify_relations(t);
  CHECK_FALSE(r.all_pass());
  const CheckEntry& anti = r.entries.front();
  CHECK(anti.relation == "antisymmetry");
  CHECK(anti.instance == "01");
  CHECK_FALSE(anti.pass);
  REQUIRE(anti.residual.has_value());
  CHECK(*anti.residual == Matrix::identity(2));
  for (const auto& e : r.entries)
    if (e.pass) CHECK_FALSE(e.residual.has_value());
}

TEST_CASE("eigentable") {
  const EigenTable v2 = eigentable(build_tetra(evaluation_module(1, 2)));
  CHECK(v2.eigenvalues == std::vector<Rational>{1, -1});
  for (const auto& p : unordered_pairs()) CHECK(v2.dims.at(p) == std::vector<std::size_t>{1, 1});
  CHECK(v2.ok());
  const EigenTable v23 = eigentable(build_tetra(module({{1, 2}, {1, 3}})));
  for (const auto& p : unordered_pairs()) CHECK(v23.dims.at(p) == std::vector<std::size_t>{1, 2, 1});
  CHECK(v23.ok());
  const EigenTable triv = eigentable(build_tetra(module({{0, 1}})));
  CHECK(triv.dims.at({0, 1}) == std::vector<std::size_t>{1});
}

TEST_CASE("every generator has spectrum d, d-2, ..., -d") {
  const TetraModule t = build_tetra(module({{2, 2}, {1, 3}}));
  for (const auto& p : ordered_pairs())
    CHECK(rational_diagonal_spectrum(t.x.at(p)) == std::vector<Rational>{3, 1, -1, -3});
}

TEST_CASE("action table rows") {
  CHECK(classify_action_row({0, 1}, {0, 1}) == ActionRow::kSame);
  CHECK(classify_action_row({0, 1}, {1, 0}) == ActionRow::kReversed);
  CHECK(classify_action_row({0, 1}, {1, 2}) == ActionRow::kTEqualsS);
  CHECK(classify_action_row({0, 1}, {2, 1}) == ActionRow::kUEqualsS);
  CHECK(classify_action_row({0, 1}, {0, 2}) == ActionRow::kTEqualsR);
  CHECK(classify_action_row({0, 1}, {2, 0}) == ActionRow::kUEqualsR);
  CHECK(classify_action_row({0, 1}, {2, 3}) == ActionRow::kDistinct);
  const Report r = verify_action_table(build_tetra(module({{1, 2}, {1, 3}})));
  CHECK(r.entries.size() == 12 * 12 * 3);
  CHECK(r.all_pass());
}

TEST_CASE("round trip is a fixed point") {
  CHECK(roundtrip_uniqueness(evaluation_module(1, 2)));
  CHECK(roundtrip_uniqueness(module({{1, 2}, {1, 3}})));
  const TetraModule t = build_tetra(module({{2, 5}}));
  CHECK(flags_from_generators(t) == *t.flags);
}

TEST_CASE("build rejects reducible or shifted modules") {
  CHECK_THROWS_AS(build_tetra(module({{1, 2}}, 3)), ModuleTypeError);
  CHECK_THROWS_AS(build_tetra(evaluation_module(1, 1)), ReducibleError);
  CHECK_THROWS_AS(build_tetra(module({{1, 2}, {1, ratio(1, 2)}})), ReducibleError);
}
