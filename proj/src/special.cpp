#include "gwwedge/special.hpp"

#include <algorithm>

#include "gwwedge/errors.hpp"

namespace gwwedge {

std::vector<Rational> varsigma_coeffs(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(n, 0) + 1), Rational(0));
  for (int k = 0; 2 * k + 1 <= n; ++k)
    c[static_cast<std::size_t>(2 * k + 1)] = 1 / (power(Rational(4), k) * factorial(2 * k + 1));
  return c;
}

std::vector<Rational> S_coeffs(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(n, 0) + 1), Rational(0));
  for (int k = 0; 2 * k <= n; ++k)
    c[static_cast<std::size_t>(2 * k)] = 1 / (power(Rational(4), k) * factorial(2 * k + 1));
  return c;
}

std::vector<Rational> inv_S_coeffs(int n) {
  std::vector<Rational> s = S_coeffs(n);
  std::vector<Rational> inv(s.size(), Rational(0));
  inv[0] = 1;
  for (std::size_t m = 1; m < s.size(); ++m) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= m; ++j) acc += s[j] * inv[m - j];
    inv[m] = -acc;
  }
  return inv;
}

Rational inv_varsigma_coeff(int n) {
  if (n < -1) return 0;
  return inv_S_coeffs(n + 1)[static_cast<std::size_t>(n + 1)];
}

Series substitute(const RingPtr& ring, const std::vector<Rational>& coeffs, int shift,
                  const LinearForm& L) {
  Series out(ring);
  if (L.coeffs.size() != ring->size()) throw ConfigError("linear form over another ring");
  int v = L.single_variable();
  if (v >= 0) {
    std::size_t vi = static_cast<std::size_t>(v);
    const Rational& c = L.coeffs[vi];
    Exponents e(ring->size(), 0);
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
      if (coeffs[m] == 0) continue;
      int p = static_cast<int>(m) + shift;
      if (p > ring->max_exp(vi)) break;
      e[vi] = p;
      out.add_term(e, coeffs[m] * power(c, p));
    }
    return out;
  }
  if (L.is_zero()) {
    if (shift > 0 || coeffs.empty()) return out;
    if (shift < 0) throw DomainError("negative power of the zero form");
    out.add_term(Exponents(ring->size(), 0), coeffs[0]);
    return out;
  }
  if (shift < 0) throw DomainError("negative powers need a single-variable argument");
  Series base = Series::linear(ring, L);
  Series p = base.pow(shift);
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (p.is_zero()) break;
    if (coeffs[m] != 0) out += p * coeffs[m];
    p = p * base;
  }
  return out;
}

namespace {

int total_truncation(const RingPtr& ring, const LinearForm& L) {
  int t = 0;
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (L.coeffs[i] != 0) t += std::max(ring->max_exp(i), 0);
  return t;
}

}  // namespace

Series varsigma(const RingPtr& ring, const LinearForm& L) {
  return substitute(ring, varsigma_coeffs(total_truncation(ring, L)), 0, L);
}

Series varsigma(const RingPtr& ring, std::string_view var, const Rational& scale) {
  return varsigma(ring, LinearForm::var(ring, var, scale));
}

Series S_series(const RingPtr& ring, const LinearForm& L) {
  return substitute(ring, S_coeffs(total_truncation(ring, L)), 0, L);
}

Series inv_varsigma(const RingPtr& ring, const LinearForm& L) {
  int v = L.single_variable();
  if (v < 0) throw DomainError("1/varsigma of a form that is not a single variable");
  return substitute(ring, inv_S_coeffs(ring->max_exp(static_cast<std::size_t>(v)) + 1), -1, L);
}

Series S_power(const RingPtr& ring, const LinearForm& L, const Series& exponent) {
  if (exponent.is_constant()) {
    Rational e = exponent.constant_term();
    if (e.get_den() == 1) return S_series(ring, L).pow(static_cast<int>(e.get_num().get_si()));
  }
  return (exponent * S_series(ring, L).log()).exp();
}

Series exp_linear(const RingPtr& ring, const Rational& c, const LinearForm& L) {
  int n = total_truncation(ring, L);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n + 1));
  Rational cp = 1;
  for (int m = 0; m <= n; ++m) {
    coeffs[static_cast<std::size_t>(m)] = cp / factorial(m);
    cp *= c;
  }
  return substitute(ring, coeffs, 0, L);
}

Series pochhammer(const Series& x, int n) {
  const RingPtr& ring = x.ring();
  Series one = Series::constant(ring, 1);
  if (n >= 0) {
    Series acc = one;
    for (int j = 1; j <= n; ++j) acc = acc * (x + Series::constant(ring, j));
    return acc;
  }
  return pochhammer_reciprocal(x, n).inverse();
}

Series pochhammer_reciprocal(const Series& x, int n) {
  const RingPtr& ring = x.ring();
  if (n >= 0) return pochhammer(x, n).inverse();
  Series acc = Series::constant(ring, 1);
  for (int j = 0; j < -n; ++j) acc = acc * (x - Series::constant(ring, j));
  return acc;
}

Rational pochhammer(const Rational& x, int n) {
  Rational acc = 1;
  if (n >= 0) {
    for (int j = 1; j <= n; ++j) acc *= x + j;
    return acc;
  }
  for (int j = 0; j < -n; ++j) acc *= x - j;
  if (acc == 0) throw DomainError("pochhammer symbol has a pole");
  return 1 / acc;
}

}  // namespace gwwedge
