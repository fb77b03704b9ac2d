#include "tetrabox/rational.hpp"

#include <cctype>

#include "tetrabox/errors.hpp"

namespace tetrabox {

Rational ratio(long p, long q) {
  if (q == 0) throw DomainError("ratio: zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("not a rational number: \"" + std::string(text) + "\"");

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational reciprocal(const Rational& value) {
  if (is_zero(value)) throw DomainError("reciprocal of zero");
  return Rational(1) / value;
}

}  // namespace tetrabox
