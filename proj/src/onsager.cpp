#include "tetrabox/onsager.hpp"

#include <string>

#include "tetrabox/errors.hpp"
#include "tetrabox/spectrum.hpp"

namespace tetrabox {

bool Sl2Triple::satisfies_brackets() const {
  return commutator(e, f) == h && commutator(h, e) == Rational(2) * e && commutator(h, f) == Rational(-2) * f;
}

Sl2Triple sl2_irreducible(std::size_t n) {
  if (n >= dimension_guard())
    throw DimensionError("sl2 module of dimension " + std::to_string(n + 1) + " exceeds the dimension guard");
  const std::size_t dim = n + 1;
  Sl2Triple t{Matrix(dim, dim), Matrix(dim, dim), Matrix(dim, dim)};
  const long top = static_cast<long>(n);
  for (std::size_t i = 0; i < dim; ++i) {
    const long li = static_cast<long>(i);
    t.h(i, i) = top - 2 * li;
    if (i + 1 < dim) t.f(i + 1, i) = 1;
    if (i > 0) t.e(i - 1, i) = li * (top - li + 1);
  }
  return t;
}

void ModuleSpec::validate() const {
  if (factors.empty()) throw DomainError("module spec has no factors");
  std::size_t dim = 1;
  const std::size_t guard = dimension_guard();
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (is_zero(factors[k].a))
      throw DomainError("factor " + std::to_string(k + 1) + ": evaluation parameter must be nonzero");
    if (factors[k].n + 1 > guard || dim * (factors[k].n + 1) > guard)
      throw DimensionError("module spec dimension exceeds the dimension guard of " + std::to_string(guard));
    dim *= factors[k].n + 1;
  }
}

std::size_t ModuleSpec::dimension() const {
  std::size_t dim = 1;
  for (const auto& f : factors) dim *= f.n + 1;
  return dim;
}

std::size_t ModuleSpec::diameter() const {
  std::size_t d = 0;
  for (const auto& f : factors) d += f.n;
  return d;
}

OnsagerModule evaluation_module(std::size_t n, const Rational& a) {
  if (is_zero(a)) throw DomainError("evaluation_module: parameter a must be nonzero");
  const Sl2Triple t = sl2_irreducible(n);
  OnsagerModule m{t.e + t.f, a * t.e + reciprocal(a) * t.f, std::nullopt};
  m.type = ModuleType{n, 0, 0};
  return m;
}

OnsagerModule tensor(const OnsagerModule& m1, const OnsagerModule& m2) {
  const std::size_t guard = dimension_guard();
  if (m1.dim() * m2.dim() > guard)
    throw DimensionError("tensor product of dimension " + std::to_string(m1.dim() * m2.dim()) +
                         " exceeds the dimension guard of " + std::to_string(guard));
  return OnsagerModule{kronecker_sum(m1.a, m2.a), kronecker_sum(m1.a_star, m2.a_star), std::nullopt};
}

OnsagerModule build_from_spec(const ModuleSpec& spec) {
  spec.validate();
  OnsagerModule m = evaluation_module(spec.factors.front().n, spec.factors.front().a);
  for (std::size_t k = 1; k < spec.factors.size(); ++k)
    m = tensor(m, evaluation_module(spec.factors[k].n, spec.factors[k].a));
  if (spec.has_shift()) {
    m.a = shifted(std::move(m.a), spec.alpha);
    m.a_star = shifted(std::move(m.a_star), spec.alpha_star);
  }
  m.type = module_type(m);
  return m;
}

ModuleType module_type(const OnsagerModule& m) {
  if (!m.a.is_square() || m.a.rows() != m.a_star.rows() || !m.a_star.is_square())
    throw DimensionError("module_type: A and A* must be square of equal size");
  const auto sa = arithmetic_spectrum(m.a);
  if (!sa) throw ModuleTypeError("A is not diagonalizable with spectrum {c, c-2, ..., c-2d}");
  const auto sb = arithmetic_spectrum(m.a_star);
  if (!sb) throw ModuleTypeError("A* is not diagonalizable with spectrum {c, c-2, ..., c-2d}");
  if (sa->d != sb->d)
    throw ModuleTypeError("A and A* have different numbers of eigenvalues (" + std::to_string(sa->d + 1) + " vs " +
                          std::to_string(sb->d + 1) + ")");
  const Rational d(static_cast<long>(sa->d));
  return ModuleType{sa->d, sa->top - d, sb->top - d};
}

OnsagerModule normalize_type(const OnsagerModule& m) {
  const ModuleType t = module_type(m);
  OnsagerModule out{m.a, m.a_star, ModuleType{t.diameter, 0, 0}};
  if (!t.is_zero_type()) {
    out.a = shifted(std::move(out.a), -t.alpha);
    out.a_star = shifted(std::move(out.a_star), -t.alpha_star);
  }
  return out;
}

Matrix dolan_grady_residual(const Matrix& a, const Matrix& b) {
  const Matrix ab = commutator(a, b);
  return commutator(a, commutator(a, ab)) - Rational(4) * ab;
}

bool satisfies_dolan_grady(const Matrix& a, const Matrix& a_star) {
  return dolan_grady_residual(a, a_star).is_zero() && dolan_grady_residual(a_star, a).is_zero();
}

}  // namespace tetrabox
