#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tetrabox/matrix.hpp"

namespace tetrabox {

/// Monic minimal polynomial, coefficients from the constant term upward.
std::vector<Rational> minimal_polynomial(const Matrix& m);

/// Distinct eigenvalues in descending order when m is diagonalizable with all
/// eigenvalues rational; nullopt otherwise (repeated factor in the minimal
/// polynomial, or an irrational or non-real root).
std::optional<std::vector<Rational>> rational_diagonal_spectrum(const Matrix& m);

/// Spectrum {top, top-2, ..., top-2d} of a diagonalizable matrix.
struct ArithmeticSpectrum {
  Rational top;
  std::size_t d = 0;

  std::vector<Rational> values() const;
};

/// True iff consecutive entries of a descending list drop by exactly 2.
bool is_arithmetic_step_two(const std::vector<Rational>& descending);

std::optional<ArithmeticSpectrum> arithmetic_spectrum(const Matrix& m);

}  // namespace tetrabox
