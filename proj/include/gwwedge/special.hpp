#pragma once

#include <vector>

#include "gwwedge/series.hpp"

namespace gwwedge {

// Univariate coefficient tables, index = power of x.
std::vector<Rational> varsigma_coeffs(int n);      // 2 sinh(x/2)
std::vector<Rational> S_coeffs(int n);             // sinh(x/2) / (x/2)
std::vector<Rational> inv_S_coeffs(int n);         // x / varsigma(x)
Rational inv_varsigma_coeff(int n);                // [x^n] 1/varsigma(x), n >= -1

// sum_m coeffs[m] L^{m + shift}; negative total powers need a single-variable L.
Series substitute(const RingPtr& ring, const std::vector<Rational>& coeffs, int shift,
                  const LinearForm& L);

Series varsigma(const RingPtr& ring, const LinearForm& L);
Series varsigma(const RingPtr& ring, std::string_view var, const Rational& scale);
Series S_series(const RingPtr& ring, const LinearForm& L);
Series inv_varsigma(const RingPtr& ring, const LinearForm& L);  // single variable only
Series S_power(const RingPtr& ring, const LinearForm& L, const Series& exponent);
Series exp_linear(const RingPtr& ring, const Rational& c, const LinearForm& L);

// (1 + x)_n: (x+1)...(x+n) for n >= 0, 1/(x(x-1)...(x+n+1)) for n < 0.
Series pochhammer(const Series& x, int n);
Series pochhammer_reciprocal(const Series& x, int n);
Rational pochhammer(const Rational& x, int n);

}  // namespace gwwedge
