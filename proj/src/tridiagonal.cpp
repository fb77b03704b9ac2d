#include "tetrabox/tridiagonal.hpp"

#include <algorithm>

#include "tetrabox/classify.hpp"
#include "tetrabox/errors.hpp"
#include "tetrabox/linalg.hpp"
#include "tetrabox/onsager.hpp"
#include "tetrabox/spectrum.hpp"

namespace tetrabox {

namespace {

void check_pair(const Matrix& a, const Matrix& a_star) {
  if (!a.is_square() || !a_star.is_square()) throw DimensionError("tridiagonal pair: matrices must be square");
  if (a.rows() != a_star.rows()) throw DimensionError("tridiagonal pair: matrices differ in size");
}

// B V_i ⊆ V_{i-1} + V_i + V_{i+1} for the eigenspaces of `a` in the given order.
bool is_standard_ordering(const Matrix& a, const Matrix& b, const std::vector<Rational>& order) {
  std::vector<Subspace> spaces;
  for (const auto& lambda : order) spaces.push_back(eigenspace(a, lambda));
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    Subspace window = spaces[i];
    if (i > 0) window = sum(window, spaces[i - 1]);
    if (i + 1 < spaces.size()) window = sum(window, spaces[i + 1]);
    if (!window.contains(image(b, spaces[i]))) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> find_standard_ordering(const Matrix& a, const Matrix& b,
                                                            const std::vector<Rational>& descending) {
  if (is_standard_ordering(a, b, descending)) return descending;
  std::vector<Rational> ascending(descending.rbegin(), descending.rend());
  if (is_standard_ordering(a, b, ascending)) return ascending;
  return std::nullopt;
}

}  // namespace

TdpReport verify_tridiagonal_pair(const Matrix& a, const Matrix& a_star) {
  check_pair(a, a_star);
  TdpReport report;
  const auto spec_a = rational_diagonal_spectrum(a);
  const auto spec_b = rational_diagonal_spectrum(a_star);
  report.diagonalizable_a = spec_a && is_diagonalizable_with(a, *spec_a);
  report.diagonalizable_a_star = spec_b && is_diagonalizable_with(a_star, *spec_b);
  if (report.diagonalizable_a) report.standard_ordering_a = find_standard_ordering(a, a_star, *spec_a);
  if (report.diagonalizable_a_star) report.standard_ordering_a_star = find_standard_ordering(a_star, a, *spec_b);
  report.irreducible = acts_irreducibly(a, a_star);
  report.verdict = report.diagonalizable_a && report.diagonalizable_a_star && report.standard_ordering_a &&
                   report.standard_ordering_a_star && report.irreducible;
  return report;
}

std::pair<std::vector<Rational>, std::vector<Rational>> eigenvalue_sequences(const Matrix& a, const Matrix& a_star) {
  const TdpReport report = verify_tridiagonal_pair(a, a_star);
  if (!report.verdict) throw DomainError("eigenvalue_sequences: (A, A*) is not a tridiagonal pair");
  auto descending = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  };
  auto seq = descending(*report.standard_ordering_a);
  auto dual = descending(*report.standard_ordering_a_star);
  if (!is_arithmetic_step_two(seq)) throw ModuleTypeError("eigenvalue sequence is not arithmetic with difference 2");
  if (!is_arithmetic_step_two(dual))
    throw ModuleTypeError("dual eigenvalue sequence is not arithmetic with difference 2");
  return {std::move(seq), std::move(dual)};
}

bool check_theorem_p1(const Matrix& a, const Matrix& a_star) {
  check_pair(a, a_star);
  const TdpReport report = verify_tridiagonal_pair(a, a_star);
  bool tridiagonal_side = false;
  if (report.verdict) {
    auto seq = *report.standard_ordering_a;
    auto dual = *report.standard_ordering_a_star;
    std::sort(seq.begin(), seq.end(), std::greater<>());
    std::sort(dual.begin(), dual.end(), std::greater<>());
    tridiagonal_side = is_arithmetic_step_two(seq) && is_arithmetic_step_two(dual);
  }
  const bool onsager_side = satisfies_dolan_grady(a, a_star) && acts_irreducibly(a, a_star);
  return tridiagonal_side == onsager_side;
}

bool tridiagonal_inclusion_at(const Matrix& a, const Matrix& a_star, const Rational& lambda) {
  check_pair(a, a_star);
  const Subspace window =
      sum(sum(eigenspace(a, lambda + 2), eigenspace(a, lambda)), eigenspace(a, lambda - 2));
  return window.contains(image(a_star, eigenspace(a, lambda)));
}

bool dolan_grady_vanishes_at(const Matrix& a, const Matrix& a_star, const Rational& lambda) {
  check_pair(a, a_star);
  const Subspace space = eigenspace(a, lambda);
  return (dolan_grady_residual(a, a_star) * space.basis()).is_zero();
}

}  // namespace tetrabox
