#include "tetrabox/spectrum.hpp"

#include <algorithm>
#include <functional>

#include "tetrabox/errors.hpp"

namespace tetrabox {

namespace {

using Poly = std::vector<Rational>;  // low -> high, no trailing zeros except for the zero poly {}

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::size_t degree(const Poly& p) { return p.empty() ? 0 : p.size() - 1; }

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (!a.empty() && a.size() >= b.size()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <typename T>
T evaluate(const std::vector<T>& p, const T& x) {
  T acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Sign changes of the Sturm chain at x, zeros skipped.
std::size_t sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Integer roots of a square-free monic integer polynomial. Returns false if
// some real root is not an integer or some root is not real.
bool integer_roots(const std::vector<mpz_class>& h, std::vector<mpz_class>& roots) {
  const std::size_t k = h.size() - 1;
  if (k == 0) return true;

  std::vector<Poly> chain;
  Poly p0(h.begin(), h.end());
  chain.push_back(p0);
  chain.push_back(derivative(p0));
  while (!chain.back().empty() && degree(chain.back()) > 0) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }

  mpz_class bound = 0;
  for (std::size_t i = 0; i < k; ++i) bound = std::max(bound, mpz_class(abs(h[i])));
  bound += 1;

  const Rational half(1, 2);
  const auto count = [&](const mpz_class& lo, const mpz_class& hi) {
    return sign_changes(chain, Rational(lo) - half) - sign_changes(chain, Rational(hi) + half);
  };
  if (count(-bound, bound) != k) return false;

  bool ok = true;
  std::function<void(const mpz_class&, const mpz_class&)> isolate = [&](const mpz_class& lo, const mpz_class& hi) {
    if (!ok || count(lo, hi) == 0) return;
    if (lo == hi) {
      if (evaluate(h, lo) == 0)
        roots.push_back(lo);
      else
        ok = false;
      return;
    }
    mpz_class mid = lo + hi;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
    isolate(lo, mid);
    isolate(mid + 1, hi);
  };
  isolate(-bound, bound);
  return ok && roots.size() == k;
}

}  // namespace

std::vector<Rational> minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("minimal_polynomial: matrix is not square");
  const std::size_t n = m.rows();
  const std::size_t len = n * n;

  // Reduced powers of m with the combination of raw powers that produced them.
  struct Reduced {
    std::vector<Rational> vec;
    std::vector<Rational> combo;
    std::size_t pivot;
  };
  std::vector<Reduced> basis;

  Matrix power = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Rational> vec(power.entries().begin(), power.entries().end());
    std::vector<Rational> combo(k + 1);
    combo[k] = 1;
    for (const auto& b : basis) {
      const Rational c = vec[b.pivot];
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i < len; ++i)
        if (sgn(b.vec[i]) != 0) vec[i] -= c * b.vec[i];
      for (std::size_t i = 0; i < b.combo.size(); ++i) combo[i] -= c * b.combo[i];
    }
    const auto nz = std::find_if(vec.begin(), vec.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (nz == vec.end()) return combo;  // monic: leading coefficient is the untouched 1
    const auto pivot = static_cast<std::size_t>(nz - vec.begin());
    const Rational lead = *nz;
    for (auto& x : vec) x /= lead;
    for (auto& x : combo) x /= lead;
    basis.push_back({std::move(vec), std::move(combo), pivot});
    power = power * m;
  }
  throw Error("minimal_polynomial: no dependency among the first n+1 powers");
}

std::optional<std::vector<Rational>> rational_diagonal_spectrum(const Matrix& m) {
  const Poly mu = minimal_polynomial(m);
  if (degree(gcd(mu, derivative(mu))) > 0) return std::nullopt;

  // Substitute x = y / D to get a monic integer polynomial whose rational
  // roots are integers.
  const std::size_t k = degree(mu);
  mpz_class denom = 1;
  for (const auto& c : mu) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> h(k + 1);
  mpz_class scale = 1;  // D^(k-1-j) built from the top down
  h[k] = 1;
  for (std::size_t j = k; j-- > 0;) {
    const Rational integral = mu[j] * Rational(denom);
    h[j] = integral.get_num() * scale;  // integral.get_den() == 1
    scale *= denom;
  }

  std::vector<mpz_class> roots;
  if (!integer_roots(h, roots)) return std::nullopt;
  std::vector<Rational> values;
  for (const auto& y : roots) {
    Rational r(y, denom);
    r.canonicalize();
    values.push_back(r);
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::vector<Rational> ArithmeticSpectrum::values() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i <= d; ++i) out.push_back(top - Rational(2 * static_cast<long>(i)));
  return out;
}

bool is_arithmetic_step_two(const std::vector<Rational>& descending) {
  for (std::size_t i = 1; i < descending.size(); ++i)
    if (descending[i - 1] - descending[i] != 2) return false;
  return true;
}

std::optional<ArithmeticSpectrum> arithmetic_spectrum(const Matrix& m) {
  const auto spectrum = rational_diagonal_spectrum(m);
  if (!spectrum || spectrum->empty() || !is_arithmetic_step_two(*spectrum)) return std::nullopt;
  return ArithmeticSpectrum{spectrum->front(), spectrum->size() - 1};
}

}  // namespace tetrabox
