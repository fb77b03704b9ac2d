#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tetrabox/matrix.hpp"

namespace tetrabox {

/// Matrices of e, f, h on an sl2-module.
struct Sl2Triple {
  Matrix e;
  Matrix f;
  Matrix h;

  /// [e,f] = h, [h,e] = 2e, [h,f] = -2f, exactly.
  bool satisfies_brackets() const;
};

/// Irreducible (n+1)-dimensional sl2-module in the weight basis v_0..v_n:
/// h v_i = (n-2i) v_i, f v_i = v_{i+1}, e v_i = i(n-i+1) v_{i-1}.
Sl2Triple sl2_irreducible(std::size_t n);

/// Diameter d and type (alpha, alpha*): the spectra of A and A* are
/// {d-2i+alpha} and {d-2i+alpha*}.
struct ModuleType {
  std::size_t diameter = 0;
  Rational alpha;
  Rational alpha_star;

  bool is_zero_type() const { return sgn(alpha) == 0 && sgn(alpha_star) == 0; }
  friend bool operator==(const ModuleType&, const ModuleType&) = default;
};

/// Actions A, A* of the standard generators X, Y.
struct OnsagerModule {
  Matrix a;
  Matrix a_star;
  std::optional<ModuleType> type;

  std::size_t dim() const { return a.rows(); }
};

struct Factor {
  std::size_t n = 0;  // factor dimension is n + 1
  Rational a;
};

/// Evaluation data for a tensor product of evaluation modules plus a type shift.
struct ModuleSpec {
  std::vector<Factor> factors;
  Rational alpha;
  Rational alpha_star;

  /// Throws DomainError on an empty factor list or a zero parameter, and
  /// DimensionError when the product dimension exceeds the guard.
  void validate() const;
  std::size_t dimension() const;
  std::size_t diameter() const;
  bool has_shift() const { return sgn(alpha) != 0 || sgn(alpha_star) != 0; }
};

/// A = e + f, A* = a e + a^-1 f on the (n+1)-dimensional sl2-module.
OnsagerModule evaluation_module(std::size_t n, const Rational& a);

/// Kronecker-sum action on the tensor product, row-major index convention.
OnsagerModule tensor(const OnsagerModule& m1, const OnsagerModule& m2);

/// Left fold of the factors, then the type shift; the type is filled in by module_type.
OnsagerModule build_from_spec(const ModuleSpec& spec);

/// Reads d, alpha, alpha* off the spectra; throws ModuleTypeError when either
/// generator is not diagonalizable with spectrum {c, c-2, ..., c-2d} or the
/// two diameters differ.
ModuleType module_type(const OnsagerModule& m);

/// Subtracts alpha I and alpha* I so that the type becomes (0,0).
OnsagerModule normalize_type(const OnsagerModule& m);

/// [a,[a,[a,b]]] - 4[a,b]
Matrix dolan_grady_residual(const Matrix& a, const Matrix& b);

/// Both Dolan-Grady relations hold exactly for the pair.
bool satisfies_dolan_grady(const Matrix& a, const Matrix& a_star);

}  // namespace tetrabox
