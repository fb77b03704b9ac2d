#include "tetrabox/json_io.hpp"

#include <string>

#include "tetrabox/errors.hpp"

namespace tetrabox::jsonio {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t count_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

json type_pair(const Rational& a, const Rational& b) { return json::array({to_json(a), to_json(b)}); }

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Subspace& s) { return to_json(s.basis()); }

json to_json(const Flag& f) {
  json out = json::array();
  for (const auto& c : f.components) out.push_back(to_json(c));
  return out;
}

json to_json(const Decomposition& d) {
  json out = json::array();
  for (const auto& p : d.parts) out.push_back(to_json(p));
  return out;
}

json to_json(const ModuleSpec& s) {
  json factors = json::array();
  for (const auto& f : s.factors) factors.push_back({{"n", f.n}, {"a", to_json(f.a)}});
  return {{"factors", std::move(factors)}, {"shift", type_pair(s.alpha, s.alpha_star)}};
}

json to_json(const OnsagerModule& m) {
  json out = {{"dim", m.dim()}, {"A", to_json(m.a)}, {"Astar", to_json(m.a_star)}};
  if (m.type) {
    out["diameter"] = m.type->diameter;
    out["type"] = type_pair(m.type->alpha, m.type->alpha_star);
  } else {
    out["diameter"] = nullptr;
    out["type"] = nullptr;
  }
  return out;
}

json to_json(const TetraModule& t) {
  json x = json::object();
  for (const auto& [p, m] : t.x) x[pair_name(p)] = to_json(m);
  return {{"dim", t.dim}, {"d", t.d}, {"x", std::move(x)}};
}

json to_json(const Report& r) {
  json out = json::array();
  for (const auto& e : r.entries) {
    json entry = {{"relation", e.relation}, {"instance", e.instance}, {"pass", e.pass}};
    if (e.residual) entry["residual"] = to_json(*e.residual);
    out.push_back(std::move(entry));
  }
  return out;
}

json to_json(const TdpReport& r) {
  const auto ordering = [](const std::optional<std::vector<Rational>>& o) -> json {
    if (!o) return nullptr;
    json arr = json::array();
    for (const auto& x : *o) arr.push_back(to_json(x));
    return arr;
  };
  return {{"diagonalizable_A", r.diagonalizable_a},
          {"diagonalizable_Astar", r.diagonalizable_a_star},
          {"standard_ordering_A", ordering(r.standard_ordering_a)},
          {"standard_ordering_Astar", ordering(r.standard_ordering_a_star)},
          {"irreducible", r.irreducible},
          {"verdict", r.verdict}};
}

json to_json(const EigenTable& t) {
  json eig = json::array();
  for (const auto& x : t.eigenvalues) eig.push_back(to_json(x));
  json dims = json::object();
  for (const auto& [p, row] : t.dims) dims[pair_name(p)] = row;
  return {{"d", t.d},
          {"eigenvalues", std::move(eig)},
          {"dims", std::move(dims)},
          {"constant_across_pairs", t.constant_across_pairs},
          {"symmetric", t.symmetric},
          {"sums_to_dim", t.sums_to_dim},
          {"all_nonzero", t.all_nonzero}};
}

json to_json(const EquivalenceKey& k) {
  json out = json::array();
  for (const auto& [n, a] : k.entries) out.push_back({{"n", n}, {"a", to_json(a)}});
  return out;
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("rational values must be JSON strings, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

ModuleSpec spec_from_json(const json& j) {
  ModuleSpec spec;
  const json& factors = field(j, "factors");
  if (!factors.is_array()) throw ParseError("\"factors\" must be an array");
  for (const auto& f : factors) spec.factors.push_back({count_from_json(field(f, "n"), "n"), rational_from_json(field(f, "a"))});
  if (j.contains("shift")) {
    const json& shift = j.at("shift");
    if (!shift.is_array() || shift.size() != 2) throw ParseError("\"shift\" must be a pair of rationals");
    spec.alpha = rational_from_json(shift[0]);
    spec.alpha_star = rational_from_json(shift[1]);
  }
  try {
    spec.validate();
  } catch (const Error& e) {
    throw ParseError(std::string("invalid module spec: ") + e.what());
  }
  return spec;
}

OnsagerModule onsager_from_json(const json& j) {
  OnsagerModule m{matrix_from_json(field(j, "A")), matrix_from_json(field(j, "Astar")), std::nullopt};
  if (!m.a.is_square() || !m.a_star.is_square() || m.a.rows() != m.a_star.rows() || m.a.rows() == 0)
    throw ParseError("A and Astar must be nonempty square matrices of equal size");
  if (j.contains("dim") && count_from_json(j.at("dim"), "dim") != m.dim())
    throw ParseError("\"dim\" does not match the matrix size");
  if (j.contains("type") && !j.at("type").is_null()) {
    const json& type = j.at("type");
    if (!type.is_array() || type.size() != 2) throw ParseError("\"type\" must be a pair of rationals");
    m.type = ModuleType{count_from_json(field(j, "diameter"), "diameter"), rational_from_json(type[0]),
                        rational_from_json(type[1])};
  }
  return m;
}

TetraModule tetra_from_json(const json& j) {
  TetraModule t;
  t.dim = count_from_json(field(j, "dim"), "dim");
  t.d = count_from_json(field(j, "d"), "d");
  const json& x = field(j, "x");
  for (const auto& p : ordered_pairs()) {
    Matrix m = matrix_from_json(field(x, pair_name(p).c_str()));
    if (m.rows() != t.dim || m.cols() != t.dim) throw ParseError("x" + pair_name(p) + " has the wrong size");
    t.x.emplace(p, std::move(m));
  }
  return t;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace tetrabox::jsonio
