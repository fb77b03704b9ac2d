#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tetrabox {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// as long as every value is canonicalized on construction (see ratio()).
using Rational = mpq_class;

/// p/q in lowest terms. Throws DomainError when q == 0.
Rational ratio(long p, long q);

/// "p/q", or "p" when q == 1; the sign sits on the numerator.
std::string to_string(const Rational& value);

/// Accepts [+-]digits or [+-]digits/digits. Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// Throws DomainError on zero.
Rational reciprocal(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace tetrabox
