#include <doctest.h>

#include <algorithm>

#include "gwwedge/errors.hpp"
#include "gwwedge/relative.hpp"
#include "gwwedge/special.hpp"
#include "oracles.hpp"

using namespace gwwedge;

namespace {

ContactData tube(std::vector<int> a, std::vector<int> ks, std::vector<int> b) {
  ContactData cd;
  cd.mu0 = std::move(a);
  cd.insertions = std::move(ks);
  cd.mu_inf = std::move(b);
  cd.tube = true;
  return cd;
}

ContactData cap(std::vector<int> a, std::vector<int> ks) {
  ContactData cd;
  cd.mu0 = std::move(a);
  cd.insertions = std::move(ks);
  return cd;
}

Rational prod_parts(const Partition& p) {
  Rational r = 1;
  for (int x : p.parts()) r *= x;
  return r;
}

}  // namespace

TEST_CASE("N weights") {
  std::vector<int> b{-1, -2, -3};
  CHECK(N_weight(b, {{0, 1, 2}}) == 2 * (-2) * (-3));
  CHECK(N_weight(b, {{0, 2}, {1}}) == -3);
  CHECK(N_weight(b, {{0}, {1}, {2}}) == 1);
}

TEST_CASE("nested brackets collapse") {
  for (int a = 2; a <= 4; ++a) {
    CHECK(verify_lemma_comb(a, {-1}, 5).passed);
    if (a > 2) CHECK(verify_lemma_comb(a, {-2}, 5).passed);
  }
  CHECK(verify_lemma_comb(4, {-1, -1}, 5).passed);
  CHECK(verify_lemma_comb(4, {-2, -1}, 5).passed);
  CHECK_THROWS_AS(verify_lemma_comb(1, {-1}, 5), DomainError);
  CHECK_THROWS_AS(verify_lemma_comb(3, {-1, 1}, 5), DomainError);
  // individual brackets: {alpha_3, E_{-1}[0] E_{-1}[0]} = 6 alpha_1
  CHECK(nested_bracket(3, {-1, -1}, {{0}, {1}}).to_string() == WedgeOperator::scaled(Rational(6), WedgeOperator::alpha(1)).to_string());
}

TEST_CASE("negative contact block is symmetric in b") {
  std::vector<int> b{-2, -1, -1};
  std::sort(b.begin(), b.end());
  auto ref = negative_contact_block(b);
  do {
    auto op = negative_contact_block(b);
    for (const auto& l : partitions_up_to(6)) {
      FockVector v = FockVector::basis(scalar_ring(), l);
      CHECK(apply(op, v) == apply(ref, v));
    }
  } while (std::next_permutation(b.begin(), b.end()));
}

TEST_CASE("invariants without negative contact match characters") {
  for (int d = 1; d <= 4; ++d) {
    Partition ones(std::vector<int>(static_cast<std::size_t>(d), 1));
    for (const auto& mu : partitions_of(d)) {
      for (int k = 0; k <= 3; ++k) {
        Rational want = oracle::character_vev(mu, k, ones) / (prod_parts(mu) * oracle::factorial(d));
        CHECK(cap_invariant(cap(mu.parts(), {k})) == want);
        for (const auto& nu : partitions_of(d)) {
          Rational t = oracle::character_vev(mu, k, nu) / (prod_parts(mu) * prod_parts(nu));
          CHECK(tube_invariant(tube(mu.parts(), {k}, nu.parts())) == t);
        }
      }
    }
  }
}

TEST_CASE("small negative contact values") {
  // disconnected = connected one-point + vacuum E_0 term times the unmarked invariant
  const int order = 4;
  for (auto cd : {tube({2, -1}, {}, {1}), tube({1}, {}, {2, -1}), tube({3, -1}, {}, {2})}) {
    Series conn = one_point_tube_connected(cd, order);
    Rational bare = tube_invariant(cd);
    for (int k = 0; k <= 2; ++k) {
      ContactData with = cd;
      with.insertions = {k};
      Rational vac = inv_varsigma_coeff(k + 1);
      CHECK_MESSAGE(tube_invariant(with) == conn.coeff({k + 1}) + vac * bare, with.to_string());
    }
  }
  CHECK(tube_invariant(tube({2, -1}, {0}, {1})) == Rational(23, 24));
  CHECK(tube_invariant(tube({3, -1, -1}, {0, 0}, {1})) == Rational(529, 576));
  CHECK_THROWS_AS(tube_invariant(tube({2}, {0}, {1})), DomainError);
  CHECK_THROWS_AS(cap_invariant(cap({1, -1}, {0})), DomainError);
}

TEST_CASE("connected one-point function: closed form against the cumulant") {
  const int order = 6;
  std::vector<ContactData> cases{
      tube({1}, {}, {1}),         tube({2}, {}, {1, 1}),     tube({2, -1}, {}, {1}),
      tube({3, -1}, {}, {2}),     tube({3, -1, -1}, {}, {1}), tube({2, 1, -1}, {}, {2}),
      tube({1, 1}, {}, {3, -1}),  tube({3, -2}, {}, {2, -1}),
  };
  for (const auto& cd : cases) {
    Series closed = one_point_tube_connected(cd, order);
    Series cumulant = one_point_tube_connected_vev(cd, order);
    CHECK_MESSAGE(closed.truncated(0, order - 1) == cumulant.truncated(0, order - 1), cd.to_string());
  }
  RingPtr zr = make_ring({"z"}, {order}, {-1});
  CHECK(one_point_tube_connected(tube({2, -1}, {}, {1}), order) == varsigma(zr, LinearForm::var(zr, "z")));
}

TEST_CASE("Hodge integrals in genus zero") {
  CHECK(genus0_hodge({Rational(3)}) == Rational(1, 3));
  CHECK(genus0_hodge({Rational(2), Rational(3)}) == Rational(6, 5));
  CHECK_THROWS_AS(genus0_hodge({Rational(2), Rational(-2)}), DomainError);
  CHECK(genus0_hodge({Rational(1), Rational(2), Rational(3), Rational(-1)}) == Rational(-6 * 5));
}

TEST_CASE("single-block coefficients") {
  for (int r = 2; r <= 5; ++r) {
    for (auto b : std::vector<std::vector<int>>{{-1}, {-1, -1}, {-2, -1}, {-1, -1, -1}}) {
      auto chk = detcoeff_rederivation(4, b, Rational(r));
      CHECK(chk.operator_side == chk.closed_form);
    }
  }
  CHECK(coeff_CP({-1, -2}, Rational(2)) == Rational(-1, 2));
}
