#include "gwwedge/rational.hpp"

#include <sstream>

#include "gwwedge/errors.hpp"

namespace gwwedge {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw ConfigError("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw ConfigError("malformed rational: " + std::string(text));
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw ConfigError("malformed rational: " + std::string(text));
  if (q.get_den() == 0) throw ConfigError("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

std::string to_decimal(const Rational& q, int digits) {
  mpf_class f(q, 256);
  std::ostringstream os;
  os.precision(digits);
  os << f;
  return os.str();
}

Rational factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

Rational power(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    Rational inv = 1 / base;
    return power(inv, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational lagrange_eval(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                       const Rational& x) {
  Rational total = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational term = ys[i];
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term *= (x - xs[j]) / (xs[i] - xs[j]);
    }
    total += term;
  }
  return total;
}

Rational lagrange_constant_term(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  return lagrange_eval(xs, ys, 0);
}

std::vector<Rational> lagrange_coefficients(const std::vector<Rational>& xs,
                                            const std::vector<Rational>& ys) {
  std::size_t n = xs.size();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < n; ++k) out[k] += ys[i] * basis[k] / denom;
  }
  return out;
}

}  // namespace gwwedge
