#include "tetrabox/tetra.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "tetrabox/classify.hpp"
#include "tetrabox/errors.hpp"
#include "tetrabox/linalg.hpp"

namespace tetrabox {

const std::vector<IndexPair>& ordered_pairs() {
  static const std::vector<IndexPair> pairs = [] {
    std::vector<IndexPair> out;
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s)
        if (r != s) out.emplace_back(r, s);
    return out;
  }();
  return pairs;
}

const std::vector<IndexPair>& unordered_pairs() {
  static const std::vector<IndexPair> pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return pairs;
}

std::string pair_name(const IndexPair& p) { return std::to_string(p.first) + std::to_string(p.second); }

const Matrix& TetraModule::operator()(int r, int s) const {
  const auto it = x.find({r, s});
  if (it == x.end()) throw DomainError("no generator x_" + std::to_string(r) + std::to_string(s));
  return it->second;
}

namespace {

Rational eigenvalue_at(std::size_t d, std::size_t i) {
  return Rational(2 * static_cast<long>(i) - static_cast<long>(d));
}

// Eigenspaces V_rs(2i-d) for every ordered pair, zero outside the range.
class EigenCache {
 public:
  explicit EigenCache(const TetraModule& t) : dim_(t.dim), d_(t.d) {
    const auto& pairs = ordered_pairs();
    spaces_.resize(pairs.size() * (d_ + 1));
    detail::parallel_for_index(spaces_.size(), [&](std::size_t k) {
      const std::size_t p = k / (d_ + 1);
      const std::size_t i = k % (d_ + 1);
      spaces_[k] = eigenspace(t(pairs[p].first, pairs[p].second), eigenvalue_at(d_, i));
    });
  }

  Subspace at(const IndexPair& rs, const Rational& lambda) const {
    const Rational index = (lambda + Rational(static_cast<long>(d_))) / 2;
    if (index.get_den() != 1 || index < 0 || index > static_cast<long>(d_)) return Subspace::zero(dim_);
    const auto& pairs = ordered_pairs();
    const auto p = static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), rs) - pairs.begin());
    return spaces_[p * (d_ + 1) + index.get_num().get_ui()];
  }

  // V_rs(lambda) + V_rs(lambda-2) + ...
  Subspace partial_sum(const IndexPair& rs, const Rational& lambda) const {
    Subspace acc = Subspace::zero(dim_);
    for (Rational mu = lambda; mu >= -static_cast<long>(d_); mu -= 2) acc = sum(acc, at(rs, mu));
    return acc;
  }

 private:
  std::size_t dim_;
  std::size_t d_;
  std::vector<Subspace> spaces_;
};

CheckEntry identity_entry(std::string relation, std::string instance, Matrix residual) {
  CheckEntry e{std::move(relation), std::move(instance), residual.is_zero(), std::nullopt};
  if (!e.pass) e.residual = std::move(residual);
  return e;
}

}  // namespace

TetraModule build_tetra(const OnsagerModule& m, const BuildOptions& options) {
  const ModuleType type = module_type(m);
  if (!type.is_zero_type())
    throw ModuleTypeError("type (" + to_string(type.alpha) + "," + to_string(type.alpha_star) + ") is not (0,0)");
  const std::array<Flag, 4> flags = four_flags(m);
  for (const auto& [r, s] : unordered_pairs())
    if (!are_opposite(flags[r], flags[s]))
      throw ReducibleError("reducible: flags " + std::to_string(r) + " and " + std::to_string(s) +
                           " are not opposite");
  const std::size_t n = m.dim();
  if (options.check_irreducible && n <= kOracleGuard) {
    const Matrix gens[] = {m.a, m.a_star};
    const std::size_t algebra = generated_algebra_dimension(gens, n * n);
    if (algebra < n * n)
      throw ReducibleError("reducible: (A, A*) generate an algebra of dimension " + std::to_string(algebra) +
                           " < " + std::to_string(n * n));
  }

  TetraModule t{n, type.diameter, {}, flags};
  const auto& pairs = ordered_pairs();
  std::vector<Matrix> built(pairs.size());
  detail::parallel_for_index(pairs.size(), [&](std::size_t k) {
    const auto [r, s] = pairs[k];
    const Decomposition dec = induced_decomposition(flags[r], flags[s]);
    Matrix change(n, n);
    std::vector<Rational> diag;
    std::size_t col = 0;
    for (std::size_t i = 0; i < dec.parts.size(); ++i) {
      const Matrix& b = dec.parts[i].basis();
      for (std::size_t c = 0; c < b.cols(); ++c, ++col) {
        for (std::size_t row = 0; row < n; ++row) change(row, col) = b(row, c);
        diag.push_back(eigenvalue_at(t.d, i));
      }
    }
    const auto change_inv = inverse(change);
    if (!change_inv) throw Error("build_tetra: induced decomposition for " + pair_name(pairs[k]) + " is not a basis");
    built[k] = change * Matrix::diagonal(diag) * *change_inv;
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) t.x.emplace(pairs[k], std::move(built[k]));
  return t;
}

Report verify_relations(const TetraModule& t) {
  struct Job {
    int kind;  // 0 antisymmetry, 1 bracket, 2 Dolan-Grady
    std::array<int, 4> idx;
  };
  std::vector<Job> jobs;
  for (const auto& [r, s] : unordered_pairs()) jobs.push_back({0, {r, s, 0, 0}});
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int u = 0; u < 4; ++u)
        if (r != s && s != u && r != u) jobs.push_back({1, {r, s, u, 0}});
  std::array<int, 4> perm = {0, 1, 2, 3};
  do {
    jobs.push_back({2, perm});
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<CheckEntry> entries(jobs.size());
  detail::parallel_for_index(jobs.size(), [&](std::size_t k) {
    const auto& [kind, i] = jobs[k];
    if (kind == 0) {
      entries[k] = identity_entry("antisymmetry", std::to_string(i[0]) + std::to_string(i[1]),
                                  t(i[0], i[1]) + t(i[1], i[0]));
    } else if (kind == 1) {
      const Matrix& a = t(i[0], i[1]);
      const Matrix& b = t(i[1], i[2]);
      entries[k] = identity_entry("bracket", std::to_string(i[0]) + std::to_string(i[1]) + std::to_string(i[2]),
                                  commutator(a, b) - Rational(2) * a - Rational(2) * b);
    } else {
      entries[k] = identity_entry("dolan_grady",
                                  std::to_string(i[0]) + std::to_string(i[1]) + std::to_string(i[2]) +
                                      std::to_string(i[3]),
                                  dolan_grady_residual(t(i[0], i[1]), t(i[2], i[3])));
    }
  });
  return Report{std::move(entries)};
}

EigenTable eigentable(const TetraModule& t) {
  EigenTable table;
  table.d = t.d;
  for (std::size_t i = 0; i <= t.d; ++i) table.eigenvalues.push_back(eigenvalue_at(t.d, t.d - i));
  const auto& pairs = unordered_pairs();
  std::vector<std::vector<std::size_t>> rows(pairs.size());
  detail::parallel_for_index(pairs.size(), [&](std::size_t k) {
    for (const auto& lambda : table.eigenvalues)
      rows[k].push_back(eigenspace(t(pairs[k].first, pairs[k].second), lambda).dim());
  });
  table.constant_across_pairs = true;
  table.symmetric = true;
  table.sums_to_dim = true;
  table.all_nonzero = true;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& row = rows[k];
    if (row != rows.front()) table.constant_across_pairs = false;
    if (!std::equal(row.begin(), row.end(), row.rbegin())) table.symmetric = false;
    std::size_t total = 0;
    for (std::size_t v : row) {
      total += v;
      if (v == 0) table.all_nonzero = false;
    }
    if (total != t.dim) table.sums_to_dim = false;
    table.dims.emplace(pairs[k], row);
  }
  return table;
}

ActionRow classify_action_row(const IndexPair& rs, const IndexPair& tu) {
  const auto [r, s] = rs;
  const auto [t, u] = tu;
  if (t == r && u == s) return ActionRow::kSame;
  if (t == s && u == r) return ActionRow::kReversed;
  if (t == s) return ActionRow::kTEqualsS;
  if (u == s) return ActionRow::kUEqualsS;
  if (t == r) return ActionRow::kTEqualsR;
  if (u == r) return ActionRow::kUEqualsR;
  return ActionRow::kDistinct;
}

std::string row_name(ActionRow row) {
  switch (row) {
    case ActionRow::kSame: return "t=r,u=s";
    case ActionRow::kReversed: return "t=s,u=r";
    case ActionRow::kTEqualsS: return "t=s,u!=r";
    case ActionRow::kUEqualsS: return "t!=r,u=s";
    case ActionRow::kTEqualsR: return "t=r,u!=s";
    case ActionRow::kUEqualsR: return "t!=s,u=r";
    case ActionRow::kDistinct: return "distinct";
  }
  return "?";
}

Report verify_action_table(const TetraModule& t) {
  const EigenCache cache(t);
  const auto& pairs = ordered_pairs();
  const std::size_t per_pair = t.d + 1;
  const std::size_t count = pairs.size() * pairs.size() * per_pair;
  std::vector<CheckEntry> entries(count);
  detail::parallel_for_index(count, [&](std::size_t k) {
    const IndexPair& rs = pairs[k / (pairs.size() * per_pair)];
    const IndexPair& tu = pairs[(k / per_pair) % pairs.size()];
    const Rational lambda = eigenvalue_at(t.d, t.d - k % per_pair);
    const ActionRow row = classify_action_row(rs, tu);
    const Subspace source = cache.at(rs, lambda);
    const Matrix& x = t(tu.first, tu.second);

    Matrix op = x;
    Subspace target = Subspace::zero(t.dim);
    switch (row) {
      case ActionRow::kSame: op = shifted(x, -lambda); break;
      case ActionRow::kReversed: op = shifted(x, lambda); break;
      case ActionRow::kTEqualsS: op = shifted(x, lambda); target = cache.at(rs, lambda + 2); break;
      case ActionRow::kUEqualsS: op = shifted(x, -lambda); target = cache.at(rs, lambda + 2); break;
      case ActionRow::kTEqualsR: op = shifted(x, -lambda); target = cache.at(rs, lambda - 2); break;
      case ActionRow::kUEqualsR: op = shifted(x, lambda); target = cache.at(rs, lambda - 2); break;
      case ActionRow::kDistinct:
        target = sum(sum(cache.at(rs, lambda + 2), cache.at(rs, lambda)), cache.at(rs, lambda - 2));
        break;
    }
    const bool pass = target.contains(image(op, source));
    entries[k] = CheckEntry{"action_table",
                            "rs=" + pair_name(rs) + " tu=" + pair_name(tu) + " lambda=" + to_string(lambda) +
                                " row=" + row_name(row),
                            pass, std::nullopt};
  });
  return Report{std::move(entries)};
}

Report flag_independence_report(const TetraModule& t) {
  const EigenCache cache(t);
  Report report;
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int u = s + 1; u < 4; ++u) {
        if (s == r || u == r) continue;
        for (std::size_t i = 0; i <= t.d; ++i) {
          const Rational lambda = eigenvalue_at(t.d, i);
          const bool pass = cache.partial_sum({r, s}, lambda) == cache.partial_sum({r, u}, lambda);
          report.entries.push_back({"flag_independence",
                                    "r=" + std::to_string(r) + " s=" + std::to_string(s) + " t=" + std::to_string(u) +
                                        " lambda=" + to_string(lambda),
                                    pass, std::nullopt});
        }
      }
  return report;
}

bool flag_independence_check(const TetraModule& t) { return flag_independence_report(t).all_pass(); }

Report shift_lemma_report(const TetraModule& t) {
  Report report;
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int u = 0; u < 4; ++u) {
        if (r == s || s == u || r == u) continue;
        const Matrix& a = t(r, s);
        const Matrix& b = t(s, u);
        const Matrix psi = commutator(a, b) - Rational(2) * a - Rational(2) * b;
        for (std::size_t i = 0; i <= t.d; ++i) {
          const Rational lambda = eigenvalue_at(t.d, i);
          const Subspace space = eigenspace(a, lambda);
          const bool vanishes = (psi * space.basis()).is_zero();
          const bool raises = eigenspace(a, lambda + 2).contains(image(shifted(b, lambda), space));
          report.entries.push_back({"shift_lemma",
                                    "A=x" + pair_name({r, s}) + " B=x" + pair_name({s, u}) +
                                        " lambda=" + to_string(lambda),
                                    vanishes == raises, std::nullopt});
        }
      }
  return report;
}

Report pairwise_irreducibility_report(const TetraModule& t) {
  static const std::array<std::array<int, 4>, 3> pairings = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  Report report;
  for (const auto& p : pairings) {
    const bool pass = acts_irreducibly(t(p[0], p[1]), t(p[2], p[3]));
    report.entries.push_back(
        {"pairwise_irreducible", pair_name({p[0], p[1]}) + "|" + pair_name({p[2], p[3]}), pass, std::nullopt});
  }
  return report;
}

Report identification_report(const TetraModule& t, const OnsagerModule& m) {
  Report report;
  report.entries.push_back(identity_entry("identification", "x01=A", t(0, 1) - m.a));
  report.entries.push_back(identity_entry("identification", "x23=Astar", t(2, 3) - m.a_star));
  return report;
}

std::array<Flag, 4> flags_from_generators(const TetraModule& t) {
  std::array<Flag, 4> out;
  for (int r = 0; r < 4; ++r) {
    const int s = r == 0 ? 1 : 0;
    out[r] = flag_from_decomposition(ascending_eigen_decomposition(t(r, s), t.d));
  }
  return out;
}

bool roundtrip_uniqueness(const OnsagerModule& m) {
  const TetraModule first = build_tetra(m);
  if (first(0, 1) != m.a || first(2, 3) != m.a_star) return false;
  const OnsagerModule read_back{first(0, 1), first(2, 3), std::nullopt};
  const TetraModule second = build_tetra(read_back);
  return first.x == second.x;
}

}  // namespace tetrabox
