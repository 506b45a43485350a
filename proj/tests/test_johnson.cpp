#include <doctest.h>

#include "gwwedge/errors.hpp"
#include "gwwedge/johnson.hpp"

using namespace gwwedge;

namespace {

ContactData make(std::vector<int> mu0, std::vector<int> ks, std::optional<std::vector<int>> inf = {}) {
  ContactData cd;
  cd.mu0 = std::move(mu0);
  cd.insertions = std::move(ks);
  if (inf) {
    cd.mu_inf = *inf;
    cd.tube = true;
  }
  return cd;
}

}  // namespace

TEST_CASE("leading relative-marking term is alpha_a / a") {
  for (int r = 3; r <= 5; ++r) {
    for (int a = 1; a < r; ++a) {
      WedgeOperator op = a_term(scalar_ring(), a, r, 0, 0, EquivariantMode::TZero);
      for (const auto& l : partitions_up_to(5)) {
        FockVector v = FockVector::basis(scalar_ring(), l);
        FockVector want = apply(WedgeOperator::alpha(a), v);
        want *= Rational(1, a);
        CHECK(apply(op, v) == want);
      }
    }
  }
}

TEST_CASE("Johnson bracket small values") {
  OrbifoldRequest q;
  q.r = 2;
  q.d = 1;
  q.left = {{1, 0}, {0, 0}};
  CHECK(orbifold_bracket(q).constant_term() == Rational(23, 24));
  // wrong degree: nothing reaches energy d
  q.d = 2;
  CHECK(orbifold_bracket(q).is_zero());
  q.r = 1;
  CHECK_THROWS_AS(orbifold_bracket(q), DomainError);
}

TEST_CASE("e^{t alpha_r / r} is invisible for r > d") {
  for (int r = 3; r <= 5; ++r) {
    OrbifoldRequest q;
    q.r = r;
    q.d = 2;
    q.left = ages_of({1, 1}, r, {0, 1});
    OrbifoldRequest p = q;
    p.include_exp_r = false;
    CHECK(orbifold_bracket(q) == orbifold_bracket(p));
    q.mode = p.mode = EquivariantMode::Full;
    CHECK(orbifold_bracket(q) == orbifold_bracket(p));
  }
}

TEST_CASE("full mode at t = 0 is the t_zero bracket") {
  std::vector<std::pair<ContactData, int>> cases{
      {make({1, 1}, {0, 2}), 3},           {make({2, -1}, {0, 1}, std::vector<int>{1}), 3},
      {make({3, -1}, {1}), 4},             {make({2}, {0}, std::vector<int>{1, 1}), 3},
      {make({2, -1}, {0}, std::vector<int>{2, -1}), 3},
  };
  for (const auto& [cd, r] : cases) {
    OrbifoldRequest q;
    q.r = r;
    q.s = cd.tube ? r : 1;
    q.d = cd.degree();
    q.left = ages_of(cd.mu0, r, cd.insertions);
    if (cd.tube) q.right = ages_of(cd.mu_inf, r);
    Rational t0 = orbifold_bracket(q).constant_term();
    q.mode = EquivariantMode::Full;
    q.t_degree = 3;
    Series full = orbifold_bracket(q);
    CHECK_MESSAGE(full.coeff({0}) == t0, cd.to_string());
  }
}

TEST_CASE("limit of orbifold brackets equals the closed forms") {
  std::vector<ContactData> cases{
      make({2, -1}, {}, std::vector<int>{1}),      make({2, -1}, {0}, std::vector<int>{1}),
      make({1}, {0}),                              make({3, -1}, {0, 1}),
      make({2, 1}, {1}, std::vector<int>{3}),      make({3, -1, -1}, {0, 0}, std::vector<int>{1}),
      make({3}, {0, 0}, std::vector<int>{4, -1}), make({3, -2}, {0, 0}, std::vector<int>{2, -1}),
      make({1, 1}, {2}),
  };
  for (const auto& cd : cases) {
    LimitResult lr = relative_via_limit(cd);
    CHECK_MESSAGE(lr.value == invariant(cd), cd.to_string());
    // stationary brackets are r-independent
    CHECK(lr.polynomial.size() <= 1);
  }
  CHECK_THROWS_AS(relative_via_limit(make({2, -1}, {0}), {2, 3, 4, 5, 6}), DomainError);
}
