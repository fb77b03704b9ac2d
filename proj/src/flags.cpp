#include "tetrabox/flags.hpp"

#include <algorithm>
#include <string>

#include "tetrabox/errors.hpp"

namespace tetrabox {

bool Decomposition::is_valid() const {
  if (parts.empty()) return false;
  const std::size_t n = parts.front().ambient_dim();
  std::size_t total = 0;
  Subspace span = Subspace::zero(n);
  for (const auto& p : parts) {
    if (p.ambient_dim() != n || p.is_zero()) return false;
    total += p.dim();
    span = sum(span, p);
  }
  return total == n && span.is_full();
}

bool Flag::is_valid() const {
  if (components.empty() || components.front().is_zero() || !components.back().is_full()) return false;
  for (std::size_t i = 1; i < components.size(); ++i) {
    const auto& prev = components[i - 1];
    const auto& cur = components[i];
    if (cur.ambient_dim() != prev.ambient_dim() || !cur.contains(prev) || cur.dim() == prev.dim()) return false;
  }
  return true;
}

Flag flag_from_decomposition(const Decomposition& dec) {
  Flag flag;
  if (dec.parts.empty()) return flag;
  Subspace partial = Subspace::zero(dec.parts.front().ambient_dim());
  for (const auto& p : dec.parts) {
    partial = sum(partial, p);
    flag.components.push_back(partial);
  }
  return flag;
}

Decomposition invert_decomposition(Decomposition dec) {
  std::reverse(dec.parts.begin(), dec.parts.end());
  return dec;
}

std::optional<Decomposition> try_induced_decomposition(const Flag& f, const Flag& g) {
  if (f.components.size() != g.components.size())
    throw DimensionError("flags have diameters " + std::to_string(f.diameter()) + " and " +
                         std::to_string(g.diameter()));
  if (f.components.empty()) return std::nullopt;
  if (f.components.front().ambient_dim() != g.components.front().ambient_dim())
    throw DimensionError("flags live in spaces of different dimension");
  const std::size_t d = f.diameter();
  Decomposition dec;
  for (std::size_t i = 0; i <= d; ++i) dec.parts.push_back(intersect(f.components[i], g.components[d - i]));
  if (!dec.is_valid()) return std::nullopt;
  if (flag_from_decomposition(dec) != f || flag_from_decomposition(invert_decomposition(dec)) != g)
    return std::nullopt;
  return dec;
}

bool are_opposite(const Flag& f, const Flag& g) { return try_induced_decomposition(f, g).has_value(); }

Decomposition induced_decomposition(const Flag& f, const Flag& g) {
  auto dec = try_induced_decomposition(f, g);
  if (!dec) throw DomainError("induced_decomposition: flags are not opposite");
  return *std::move(dec);
}

Decomposition ascending_eigen_decomposition(const Matrix& m, std::size_t d) {
  Decomposition dec;
  const long top = static_cast<long>(d);
  for (long i = 0; i <= top; ++i) dec.parts.push_back(eigenspace(m, Rational(2 * i - top)));
  return dec;
}

std::array<Flag, 4> four_flags(const OnsagerModule& m) {
  const ModuleType t = module_type(m);
  if (!t.is_zero_type())
    throw ModuleTypeError("type (" + to_string(t.alpha) + "," + to_string(t.alpha_star) + ") is not (0,0)");
  const Decomposition up_a = ascending_eigen_decomposition(m.a, t.diameter);
  const Decomposition up_b = ascending_eigen_decomposition(m.a_star, t.diameter);
  return {flag_from_decomposition(up_a), flag_from_decomposition(invert_decomposition(up_a)),
          flag_from_decomposition(up_b), flag_from_decomposition(invert_decomposition(up_b))};
}

}  // namespace tetrabox
