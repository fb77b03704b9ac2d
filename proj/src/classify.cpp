#include "tetrabox/classify.hpp"

#include <algorithm>
#include <deque>

#include "tetrabox/errors.hpp"
#include "tetrabox/linalg.hpp"

namespace tetrabox {

EquivalenceKey equivalence_key(const ModuleSpec& spec) {
  EquivalenceKey key;
  for (const auto& f : spec.factors) {
    if (f.n == 0) continue;
    const Rational inv = reciprocal(f.a);
    key.entries.emplace_back(f.n, to_string(inv) < to_string(f.a) ? inv : f.a);
  }
  std::sort(key.entries.begin(), key.entries.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return to_string(x.second) < to_string(y.second);
  });
  return key;
}

namespace {

struct Occurrence {
  Rational value;
  std::size_t factor;
  bool inverted;
};

std::string describe(const Occurrence& o) {
  return "a_" + std::to_string(o.factor + 1) + (o.inverted ? "^-1" : "") + " = " + to_string(o.value);
}

}  // namespace

std::optional<std::string> reducibility_reason(const ModuleSpec& spec) {
  std::vector<Occurrence> seen;
  for (std::size_t k = 0; k < spec.factors.size(); ++k) {
    const auto& f = spec.factors[k];
    if (f.n == 0) continue;
    if (is_zero(f.a)) return "evaluation parameter a_" + std::to_string(k + 1) + " is zero";
    if (f.a == 1 || f.a == -1) {
      if (spec.factors.size() == 1) return std::string("reducible: a = ±1");
      return "reducible: a = ±1 (a_" + std::to_string(k + 1) + " = " + to_string(f.a) + ")";
    }
    for (const Occurrence& cand : {Occurrence{f.a, k, false}, Occurrence{reciprocal(f.a), k, true}}) {
      for (const auto& earlier : seen)
        if (earlier.value == cand.value)
          return "reducible: evaluation parameters not mutually distinct (" + describe(earlier) + ", " +
                 describe(cand) + ")";
      seen.push_back(cand);
    }
  }
  return std::nullopt;
}

bool is_irreducible_criterion(const ModuleSpec& spec) {
  std::vector<Rational> values;
  for (const auto& f : spec.factors) {
    if (f.n == 0) continue;
    values.push_back(f.a);
    values.push_back(reciprocal(f.a));
  }
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

std::size_t generated_algebra_dimension(std::span<const Matrix> generators, std::size_t stop_at) {
  if (generators.empty()) throw DomainError("generated_algebra_dimension: no generators");
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators)
    if (!g.is_square() || g.rows() != n) throw DimensionError("generators must be square of equal size");

  // Rows are kept in insertion order; each is zero at the pivots of all
  // earlier rows, so one sequential pass reduces a candidate.
  struct Row {
    std::vector<Rational> entries;
    std::vector<std::size_t> support;
    std::size_t pivot;
  };
  std::vector<Row> rows;

  const auto try_insert = [&](const Matrix& word) {
    std::vector<Rational> v(word.entries().begin(), word.entries().end());
    mpq_class scratch;
    for (const auto& r : rows) {
      if (sgn(v[r.pivot]) == 0) continue;
      const Rational c = v[r.pivot];
      for (std::size_t i : r.support) {
        mpq_mul(scratch.get_mpq_t(), c.get_mpq_t(), r.entries[i].get_mpq_t());
        mpq_sub(v[i].get_mpq_t(), v[i].get_mpq_t(), scratch.get_mpq_t());
      }
    }
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) support.push_back(i);
    if (support.empty()) return false;
    const Rational lead = v[support.front()];
    for (std::size_t i : support) v[i] /= lead;
    rows.push_back({std::move(v), std::move(support), 0});
    rows.back().pivot = rows.back().support.front();
    return true;
  };

  std::deque<Matrix> frontier;
  frontier.push_back(Matrix::identity(n));
  try_insert(frontier.front());
  while (!frontier.empty() && rows.size() < stop_at) {
    const Matrix word = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Matrix next = g * word;
      if (try_insert(next)) frontier.push_back(std::move(next));
      if (rows.size() >= stop_at) break;
    }
  }
  return rows.size();
}

bool acts_irreducibly(const Matrix& a, const Matrix& b, std::size_t guard) {
  if (a.rows() > guard)
    throw DimensionError("Burnside test: dimension " + std::to_string(a.rows()) + " exceeds the oracle guard of " +
                         std::to_string(guard));
  const std::size_t n = a.rows();
  const Matrix gens[] = {a, b};
  return generated_algebra_dimension(gens, n * n) == n * n;
}

bool is_irreducible_burnside(const OnsagerModule& m, std::size_t guard) {
  return acts_irreducibly(m.a, m.a_star, guard);
}

bool are_equivalent(const ModuleSpec& s1, const ModuleSpec& s2) {
  return s1.alpha == s2.alpha && s1.alpha_star == s2.alpha_star && equivalence_key(s1) == equivalence_key(s2);
}

std::optional<Matrix> find_intertwiner(const OnsagerModule& m1, const OnsagerModule& m2, std::size_t guard) {
  if (m1.dim() > guard || m2.dim() > guard)
    throw DimensionError("find_intertwiner: dimension exceeds the oracle guard of " + std::to_string(guard));
  if (m1.dim() != m2.dim()) return std::nullopt;
  const std::size_t n = m1.dim();

  // Unknown S(i,k) sits at index i*n + k. Each relation S X1 = X2 S
  // contributes n^2 equations.
  Matrix system(2 * n * n, n * n);
  const std::pair<const Matrix*, const Matrix*> relations[] = {{&m1.a, &m2.a}, {&m1.a_star, &m2.a_star}};
  std::size_t eq = 0;
  for (const auto& [x1, x2] : relations) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++eq)
        for (std::size_t k = 0; k < n; ++k) {
          system(eq, i * n + k) += (*x1)(k, j);
          system(eq, k * n + j) -= (*x2)(i, k);
        }
  }
  const Subspace solutions = kernel(system);
  for (std::size_t s = 0; s < solutions.dim(); ++s) {
    Matrix candidate(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) candidate(i, k) = solutions.basis()(i * n + k, s);
    if (sgn(determinant(candidate)) != 0) return candidate;
  }
  return std::nullopt;
}

bool is_isomorphic(const ModuleSpec& s1, const ModuleSpec& s2) {
  for (const auto* s : {&s1, &s2}) {
    if (auto reason = reducibility_reason(*s)) throw ReducibleError(*reason);
    if (s->has_shift()) throw DomainError("is_isomorphic: specs must have type shift (0,0)");
  }
  return are_equivalent(s1, s2);
}

}  // namespace tetrabox
