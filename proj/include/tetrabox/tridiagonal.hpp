#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tetrabox/matrix.hpp"

namespace tetrabox {

/// Outcome of checking the four tridiagonal-pair axioms on (A, A*).
struct TdpReport {
  bool diagonalizable_a = false;
  bool diagonalizable_a_star = false;
  /// Eigenvalues of A in an order whose eigenspaces are standard, if found.
  std::optional<std::vector<Rational>> standard_ordering_a;
  std::optional<std::vector<Rational>> standard_ordering_a_star;
  bool irreducible = false;
  bool verdict = false;
};

/// Axioms: (i) both diagonalizable over Q; (ii)/(iii) the block-tridiagonal
/// inclusion for the descending eigenvalue order or its reverse; (iv) no
/// common invariant subspace, via the Burnside test.
TdpReport verify_tridiagonal_pair(const Matrix& a, const Matrix& a_star);

/// Descending eigenvalue lists of a tridiagonal pair. Throws DomainError if
/// the pair fails the axioms, ModuleTypeError if either list is not
/// arithmetic with common difference 2.
std::pair<std::vector<Rational>, std::vector<Rational>> eigenvalue_sequences(const Matrix& a, const Matrix& a_star);

/// Both sides of the tridiagonal-pair / Onsager-module equivalence, computed
/// independently: [tridiagonal pair with arithmetic-2 sequences] versus
/// [Dolan-Grady relations hold and the pair generates End(V)]. True iff they agree.
bool check_theorem_p1(const Matrix& a, const Matrix& a_star);

/// For an eigenvalue lambda of A: whether A* V_A(lambda) lies in
/// V_A(lambda+2) + V_A(lambda) + V_A(lambda-2).
bool tridiagonal_inclusion_at(const Matrix& a, const Matrix& a_star, const Rational& lambda);

/// Whether [A,[A,[A,A*]]] - 4[A,A*] vanishes on V_A(lambda).
bool dolan_grady_vanishes_at(const Matrix& a, const Matrix& a_star, const Rational& lambda);

}  // namespace tetrabox
