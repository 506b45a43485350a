#include <doctest.h>

#include "gwwedge/equivariant.hpp"
#include "gwwedge/errors.hpp"
#include "gwwedge/relative.hpp"
#include "gwwedge/special.hpp"

using namespace gwwedge;

namespace {

// move a series to another ring, renaming variables and optionally flipping t
Series rename(const Series& s, const RingPtr& target, const std::map<std::string, std::string>& map, bool flip_t) {
  Series out(target);
  const RingPtr& src = s.ring();
  for (const auto& [e, c] : s.terms()) {
    Exponents f(target->size(), 0);
    int tpow = 0;
    for (std::size_t i = 0; i < src->size(); ++i) {
      const std::string& nm = src->name(i);
      if (nm == "t") tpow = e[i];
      f[static_cast<std::size_t>(target->index_of(map.count(nm) ? map.at(nm) : nm))] = e[i];
    }
    out.add_term(f, flip_t && tpow % 2 ? Rational(-c) : c);
  }
  return out;
}

int max_t_degree(const Series& s) {
  int idx = s.ring()->index_of("t"), best = 0;
  for (const auto& [e, c] : s.terms()) best = std::max(best, e[static_cast<std::size_t>(idx)]);
  return best;
}

}  // namespace

TEST_CASE("equivariant generating functions: small values") {
  CHECK(eq_cap_gf({1}, 0, 0, 3).regular == Series::constant(equivariant_ring(0, 0, 3, 0), 1));
  CHECK(eq_cap_infinity_gf({1}, 0, 0, 3).regular.constant_term() == 1);
  CHECK(eq_tube_gf({2}, {1, 1}, 0, 0, 3).regular.is_zero());
  CHECK(eq_tube_gf({2}, {2}, 0, 0, 3).regular.constant_term() == Rational(1, 2));

  EquivariantSeries one = eq_tube_gf({1}, {1}, 1, 0, 5);
  RingPtr ring = one.regular.ring();
  LinearForm z = LinearForm::var(ring, "z1");
  CHECK(one.regular == varsigma(ring, z) + inv_varsigma(ring, z));
  CHECK(one.unstable.empty());
}

TEST_CASE("cap relative to infinity with one A insertion") {
  // <A(z) e^{alpha_1} alpha_{-1}> = S(z)^{tz} (varsigma(z)/(tz+1) + 1/varsigma(z))
  const int order = 5;
  EquivariantSeries g = eq_cap_infinity_gf({1}, 1, 0, order);
  RingPtr ring = make_ring({"z1", "t"}, {order + 2, 12}, {-1, 0});
  LinearForm z = LinearForm::var(ring, "z1");
  Series tz = Series::variable(ring, "t") * Series::variable(ring, "z1");
  Series want = S_power(ring, z, tz) * (varsigma(ring, z) * (tz + Series::constant(ring, 1)).inverse() + inv_varsigma(ring, z));
  CHECK(g.regular == want.in_ring(g.regular.ring()));
  CHECK_THROWS_AS(eq_cap_infinity_gf({1}, 2, 0, order), UnsupportedConfiguration);
  CHECK_THROWS_AS(eq_cap_gf({1}, 0, 2, order), UnsupportedConfiguration);
}

TEST_CASE("t-degree of the cap generating function") {
  for (const auto& mu : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}}) {
    for (int n = 1; n <= 3; ++n) {
      auto g = eq_cap_gf(mu, n, 0, 3);
      CHECK(max_t_degree(g.regular) <= n - 1);
      for (const auto& u : g.unstable) CHECK(max_t_degree(u.coefficient) <= n - 1);
    }
  }
}

TEST_CASE("tube at t = 0 against the non-equivariant invariants") {
  const int order = 4;
  for (int d = 1; d <= 2; ++d) {
    for (const auto& mu : partitions_of(d)) {
      for (const auto& nu : partitions_of(d)) {
        for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 0}}) {
          auto g = eq_tube_gf(mu.parts(), nu.parts(), n, m, order);
          for (const auto& u : g.unstable) CHECK(u.coefficient.coefficient_of(u.coefficient.ring()->size() - 1, 0).is_zero());
          for (int k1 = 0; k1 + 1 <= order; ++k1) {
            for (int k2 = 0; k2 + 1 <= (n + m == 2 ? order : 0); ++k2) {
              Exponents e(static_cast<std::size_t>(n + m + 1), 0);
              e[0] = k1 + 1;
              std::vector<int> ks{k1};
              if (n + m == 2) {
                e[1] = k2 + 1;
                ks.push_back(k2);
              }
              ContactData cd;
              cd.mu0 = mu.parts();
              cd.mu_inf = nu.parts();
              cd.insertions = ks;
              cd.tube = true;
              CHECK(g.regular.coeff(e) == tube_invariant(cd));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("adjoint symmetry between the two cap formulas") {
  const int order = 4;
  for (const auto& mu : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}}) {
    for (int n = 0; n <= 2; ++n) {
      auto cap = eq_cap_gf(mu, n, 1, order);
      auto inf = eq_cap_infinity_gf(mu, 1, n, order);
      std::map<std::string, std::string> names{{"w1", "z1"}};
      for (int i = 1; i <= n; ++i) names["z" + std::to_string(i)] = "w" + std::to_string(i);
      CHECK(rename(cap.regular, inf.regular.ring(), names, true) == inf.regular);
      REQUIRE(cap.unstable.size() == inf.unstable.size());
      for (std::size_t i = 0; i < cap.unstable.size(); ++i)
        CHECK(rename(cap.unstable[i].coefficient, inf.regular.ring(), names, true) == inf.unstable[i].coefficient);
    }
  }
}
