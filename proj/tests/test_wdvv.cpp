#include <doctest.h>

#include "gwwedge/errors.hpp"
#include "gwwedge/johnson.hpp"
#include "gwwedge/relative.hpp"
#include "gwwedge/wdvv.hpp"

using namespace gwwedge;

namespace {

std::vector<BasisClass> family_insertions(int a, const std::vector<int>& b, int d) {
  std::vector<BasisClass> ins{BasisClass::zero(a), BasisClass::inf(d)};
  for (int x : b) ins.push_back(BasisClass::zero(x));
  return ins;
}

// all b in {lo..-1}^n
std::vector<std::vector<int>> negative_vectors(int n, int lo) {
  std::vector<std::vector<int>> out;
  std::vector<int> b(static_cast<std::size_t>(n), -1);
  while (true) {
    out.push_back(b);
    int p = n - 1;
    while (p >= 0 && b[static_cast<std::size_t>(p)] == lo) b[static_cast<std::size_t>(p--)] = -1;
    if (p < 0) break;
    --b[static_cast<std::size_t>(p)];
  }
  return out;
}

}  // namespace

TEST_CASE("basis, duals and pairing") {
  CHECK(BasisClass::one().dual() == BasisClass::hyperplane());
  CHECK(BasisClass::zero(3).dual() == BasisClass::zero(-3));
  CHECK(pairing(BasisClass::one(), BasisClass::hyperplane()) == 1);
  CHECK(pairing(BasisClass::hyperplane(), BasisClass::hyperplane()) == 0);
  CHECK(pairing(BasisClass::inf(2), BasisClass::inf(-2)) == 1);
  CHECK(pairing(BasisClass::inf(2), BasisClass::zero(-2)) == 0);
  CHECK(pairing(BasisClass::inf(2), BasisClass::inf(2)) == 0);
}

TEST_CASE("small invariants") {
  InvariantEvaluator ev;
  CHECK(ev.I({BasisClass::zero(2), BasisClass::inf(2)}, 2) == Rational(1, 2));
  CHECK(ev.I(family_insertions(3, {-1}, 2), 2) == 1);
  CHECK(ev.I(family_insertions(4, {-1, -1}, 2), 2) == 2);
  // divisor rule
  CHECK(ev.I({BasisClass::zero(3), BasisClass::hyperplane(), BasisClass::inf(3)}, 3) == 1);
  // vanishing: partition mismatch and dimension
  CHECK(ev.I({BasisClass::zero(3), BasisClass::inf(2)}, 2) == 0);
  CHECK(ev.I({BasisClass::zero(1), BasisClass::zero(1), BasisClass::inf(2)}, 2) == 0);
  CHECK(ev.I({BasisClass::zero(2), BasisClass::hyperplane(), BasisClass::hyperplane(), BasisClass::inf(2)}, 2) == 2);
  // exchanging 0 and infinity
  CHECK(ev.I({BasisClass::inf(4), BasisClass::inf(-1), BasisClass::inf(-1), BasisClass::zero(2)}, 2) == 2);
  CHECK(ev.I({BasisClass::inf(-3), BasisClass::inf(2), BasisClass::inf(1)}, 0) == 1);
  CHECK_THROWS_AS(ev.I({BasisClass::zero(3), BasisClass::zero(-1), BasisClass::inf(3), BasisClass::inf(-1)}, 2),
                  UnsupportedConfiguration);
}

TEST_CASE("recursion reproduces d^{n-1}") {
  InvariantEvaluator rec;
  InvariantEvaluator closed(InvariantEvaluator::Mode::ClosedForm);
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 3; ++n)
      for (const auto& b : negative_vectors(n, -3)) {
        int a = d;
        for (int x : b) a -= x;
        CHECK(rec.I(family_insertions(a, b, d), d) == power(Rational(d), n - 1));
        CHECK(closed.I(family_insertions(a, b, d), d) == power(Rational(d), n - 1));
        CHECK(wdvv_residual(a, b, d) == 0);
      }
  CHECK(rec.wdvv_instances() > 0);
  CHECK(rec.solved().size() == static_cast<std::size_t>(rec.wdvv_instances()));
  for (const auto& f : rec.solved()) CHECK(wdvv_residual(f.a, f.b, f.d) == 0);
}

TEST_CASE("residual of the WDVV instance") {
  CHECK(wdvv_residual(2, {-1}, 1) == 0);
  CHECK(wdvv_residual(3, {-1, -1}, 1) == 0);
  // perturbing a value that enters the instance
  InvariantEvaluator ev(InvariantEvaluator::Mode::ClosedForm);
  ev.override_value(family_insertions(3, {-1, -1}, 1), 1, 2);
  CHECK(wdvv_residual(ev, 3, {-1, -1}, 1) != 0);
  InvariantEvaluator ev2(InvariantEvaluator::Mode::ClosedForm);
  ev2.override_value({BasisClass::zero(3), BasisClass::hyperplane(), BasisClass::zero(-1), BasisClass::inf(2)}, 2, 3);
  CHECK(wdvv_residual(ev2, 3, {-1, -1}, 1) != 0);
  CHECK_THROWS_AS(wdvv_residual(2, {1}, 3), DomainError);
  CHECK_THROWS_AS(wdvv_residual(2, {-1}, 2), DomainError);
}

TEST_CASE("family against the operator formula and the orbifold limit") {
  InvariantEvaluator ev;
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 2; ++n)
      for (const auto& b : negative_vectors(n, -2)) {
        int a = d;
        for (int x : b) a -= x;
        ContactData cd;
        cd.mu0 = {a};
        cd.mu0.insert(cd.mu0.end(), b.begin(), b.end());
        cd.mu_inf = {d};
        cd.tube = true;
        Rational want = ev.I(family_insertions(a, b, d), d);
        CHECK_MESSAGE(tube_invariant(cd) == want, cd.to_string());
        if (d <= 2 && n == 1) CHECK_MESSAGE(relative_via_limit(cd).value == want, cd.to_string());
      }
}
