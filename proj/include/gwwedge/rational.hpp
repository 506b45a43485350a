#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gwwedge {

using Rational = mpq_class;

// "p/q" in lowest terms, "p" when q = 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);
std::string to_decimal(const Rational& q, int digits = 12);

Rational factorial(int n);
Rational binomial(int n, int k);
Rational power(const Rational& base, int exponent);
Rational lagrange_constant_term(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
Rational lagrange_eval(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                       const Rational& x);
// Coefficients c_0..c_{n-1} of the interpolating polynomial.
std::vector<Rational> lagrange_coefficients(const std::vector<Rational>& xs,
                                            const std::vector<Rational>& ys);

}  // namespace gwwedge
