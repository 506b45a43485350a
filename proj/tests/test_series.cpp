#include <doctest.h>

#include <random>

#include "gwwedge/errors.hpp"
#include "gwwedge/series.hpp"
#include "gwwedge/special.hpp"
#include "oracles.hpp"

using namespace gwwedge;

namespace {

Series random_series(const RingPtr& ring, std::mt19937& rng, bool unit) {
  std::uniform_int_distribution<int> coef(-4, 4), expo(0, 3);
  Series s(ring);
  for (int i = 0; i < 5; ++i) {
    Exponents e(ring->size());
    for (auto& x : e) x = expo(rng);
    s.add_term(e, Rational(coef(rng), 1 + expo(rng)));
  }
  if (unit) {
    s -= Series::constant(ring, s.constant_term());
    s += Series::constant(ring, 1);
  }
  return s;
}

}  // namespace

TEST_CASE("rationals print in lowest terms") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rational("x"), ConfigError);
}

TEST_CASE("varsigma matches e^{z/2} - e^{-z/2}") {
  auto c = varsigma_coeffs(9);
  for (int m = 0; m <= 9; ++m) {
    Rational half = power(Rational(1, 2), m);
    Rational expect = (half - (m % 2 ? -half : half)) / oracle::factorial(m);
    CHECK(c[static_cast<std::size_t>(m)] == expect);
  }
  RingPtr ring = make_ring({"z"}, {5});
  Series s = varsigma(ring, "z", 1);
  CHECK(s.coeff({1}) == 1);
  CHECK(s.coeff({3}) == Rational(1, 24));
  CHECK(s.coeff({5}) == Rational(1, 1920));
  CHECK(s.num_terms() == 3);
}

TEST_CASE("1/varsigma against an independent solve") {
  auto inv = oracle::inv_varsigma_table(8);
  for (int n = -1; n <= 7; ++n) CHECK(inv_varsigma_coeff(n) == inv[static_cast<std::size_t>(n + 1)]);
  CHECK(inv_varsigma_coeff(1) == Rational(-1, 24));
}

TEST_CASE("truncation and pole bounds") {
  RingPtr ring = make_ring({"z"}, {4}, {-1});
  Series z = Series::variable(ring, "z");
  Series zinv = Series::monomial(ring, {-1});
  Series p = (z + Series::monomial(ring, {3}, Rational(1, 24))) * zinv;
  CHECK(p.coeff({0}) == 1);
  CHECK(p.coeff({2}) == Rational(1, 24));
  CHECK(z.pow(5).is_zero());
  CHECK_THROWS_AS(zinv * zinv, ConfigError);
  RingPtr other = make_ring({"w"}, {4});
  CHECK_THROWS_AS(z + Series::variable(other, "w"), ConfigError);
}

TEST_CASE("inverse, exp, log") {
  RingPtr ring = make_ring({"z", "t"}, {6, 3}, {-2, 0});
  LinearForm z = LinearForm::var(ring, "z");
  Series vs = varsigma(ring, z);
  Series inv = vs.inverse();
  CHECK(inv.coeff({-1, 0}) == 1);
  CHECK(inv.coeff({1, 0}) == Rational(-1, 24));
  CHECK(inv_varsigma(ring, z).truncated(0, 4) == inv.truncated(0, 4));
  Series one = vs * inv;
  // precision is lost at the top order by the pole depth
  CHECK(one.truncated(0, 5) == Series::constant(ring, 1));
  Series S = S_series(ring, z);
  CHECK(S.log().exp() == S);
  CHECK_THROWS_AS(vs.log(), DomainError);
  CHECK_THROWS_AS(S.exp(), DomainError);
  Series half = S_power(ring, z, Series::constant(ring, Rational(1, 2)));
  CHECK(half * half == S);
  Series tz = Series::monomial(ring, {1, 1});
  CHECK(pochhammer_reciprocal(tz, -2) == tz * (tz - Series::constant(ring, 1)));
  CHECK(pochhammer(tz, 2) * pochhammer_reciprocal(tz, 2) == Series::constant(ring, 1));
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(12345);
  RingPtr ring = make_ring({"x", "y"}, {5, 4});
  for (int trial = 0; trial < 40; ++trial) {
    Series a = random_series(ring, rng, false), b = random_series(ring, rng, false),
           c = random_series(ring, rng, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    Series u = random_series(ring, rng, true);
    CHECK(u * u.inverse() == Series::constant(ring, 1));
    CHECK(u.log().exp() == u);
    CHECK(u.pow(3) == u * u * u);
  }
}

TEST_CASE("fractional prefactors") {
  RingPtr ring = make_ring({"t"}, {4}, {-4});
  Series one = Series::constant(ring, 1);
  TrackedSeries a(one, FracMonomial{Rational(1, 2), Rational(-1, 2), 0});
  CHECK_THROWS_AS(a.normalized("t"), IntegrityError);
  TrackedSeries b(one, FracMonomial{Rational(1, 2), Rational(1, 2), 0});
  CHECK_THROWS_AS(b.normalized("t"), IntegrityError);
  TrackedSeries c(one, FracMonomial{Rational(3, 2), Rational(-1, 2), 0});
  CHECK_THROWS_AS(c.normalized("t"), IntegrityError);
  TrackedSeries d(one, FracMonomial{Rational(2), Rational(-1), 0});
  CHECK(d.normalized("t") == Series::monomial(ring, {1}, -1));
  CHECK_THROWS_AS(a + d, IntegrityError);
}
