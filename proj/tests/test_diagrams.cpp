#include <doctest.h>

#include <random>

#include "gwwedge/diagrams.hpp"
#include "gwwedge/errors.hpp"
#include "gwwedge/relative.hpp"

using namespace gwwedge;

namespace {

InteractionDiagram diagram(int n, std::vector<std::pair<int, int>> edges) {
  InteractionDiagram d;
  for (int v = 1; v <= n; ++v) d.vertices.push_back(v);
  d.edges = std::move(edges);
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

std::vector<GradedOp> graded(const std::vector<int>& k, int r) {
  std::vector<GradedOp> ops;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const int b = static_cast<int>(i % 2);
    ops.push_back({WedgeOperator::e_coeff(-(k[i] * r + b), static_cast<int>(i % 3)), k[i], b});
  }
  return ops;
}

const std::vector<std::string> kNames{"O1", "O2", "O3", "O4", "O5"};

}  // namespace

TEST_CASE("four moves of one positive factor") {
  // R_{1}, R_{0}, R_{0}, R_{-1}: r-energies -1, 0, 0, 1
  std::vector<int> k{-1, 0, 0, 1};
  auto K = enumerate_K(k);
  REQUIRE(K.size() == 4);
  std::vector<InteractionDiagram> want{diagram(4, {{4, 1}}), diagram(4, {{2, 1}, {4, 2}}),
                                       diagram(4, {{3, 1}, {4, 3}}), diagram(4, {{2, 1}, {3, 2}, {4, 3}})};
  std::sort(want.begin(), want.end());
  CHECK(K == want);
  CHECK(L_of_J_expression(want[0], kNames) == "[O1,[O2,[O3,O4]]]");
  CHECK(L_of_J_expression(diagram(4, {{4, 1}}), kNames) == "[O1,O4]O2O3");
  CHECK(L_of_J_expression(diagram(4, {{2, 1}, {4, 2}}), kNames) == "[O1,[O2,O4]]O3");

  auto ops = graded(k, 3);
  CHECK(operators_agree(G_n_connected(ops), L_of_J(diagram(4, {{2, 1}, {3, 2}, {4, 3}}), ops), 3));
}

TEST_CASE("F_n base cases and readout") {
  auto ops = graded({1, -1}, 2);
  CHECK(operators_agree(F_n(ops), WedgeOperator::zero(), 4));
  auto zero = graded({0, 0, 0}, 2);
  CHECK(operators_agree(F_n(zero), zero[0].op * zero[1].op * zero[2].op, 4));
  CHECK(enumerate_K({0, 0, 0}) == std::vector<InteractionDiagram>{diagram(3, {})});
  CHECK_THROWS_AS(F_n(graded({1, 0}, 2)), DomainError);

  auto two = graded({-1, 1}, 2);
  CHECK(operators_agree(L_of_J(diagram(2, {{2, 1}}), two), WedgeOperator::commutator(two[0].op, two[1].op), 4));
  CHECK(operators_agree(L_of_J(diagram(3, {}), zero), F_n(zero), 4));
  CHECK_THROWS_AS(L_of_J(diagram(3, {{1, 2}}), zero), DomainError);
  CHECK_THROWS_AS(L_of_J(diagram(3, {{3, 1}, {3, 2}}), zero), DomainError);
  CHECK(operators_agree(G_n_connected(graded({0}, 2)), graded({0}, 2)[0].op, 4));
}

TEST_CASE("a positive prefix sum empties K") {
  for (const auto& k : std::vector<std::vector<int>>{{0, 1, -1}, {-1, 2, -1}, {-1, 1, 1, -1}})
    CHECK(enumerate_K(k).empty());
}

TEST_CASE("components multiply") {
  std::vector<int> k{-1, 0, 1, -2, 2};
  for (const auto& J : enumerate_K(k)) {
    std::string joined;
    for (const auto& c : J.components()) {
      std::map<int, int> rename;
      InteractionDiagram d;
      std::vector<std::string> names;
      for (int v : c.vertices) {
        rename[v] = static_cast<int>(d.vertices.size()) + 1;
        d.vertices.push_back(rename[v]);
        names.push_back(kNames[static_cast<std::size_t>(v - 1)]);
      }
      for (const auto& [a, b] : c.edges) d.edges.emplace_back(rename[a], rename[b]);
      std::sort(d.edges.begin(), d.edges.end());
      joined += L_of_J_expression(d, names);
    }
    CHECK(joined == L_of_J_expression(J, kNames));
  }
}

TEST_CASE("validity ignores the residual energies") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> k(4);
    int s = 0;
    for (int i = 0; i < 3; ++i) s += (k[static_cast<std::size_t>(i)] = pick(rng));
    k[3] = -s;
    auto K = enumerate_K(k);
    CHECK(K == recursion_diagrams(k));
    // the operator identity holds whatever residuals b the factors carry
    std::vector<GradedOp> ops;
    for (std::size_t i = 0; i < 4; ++i) {
      const int b = pick(rng);
      ops.push_back({WedgeOperator::e_coeff(-(k[i] * 3 + b), 1), k[i], b});
    }
    std::vector<WedgeOperator> terms;
    for (const auto& J : K) terms.push_back(L_of_J(J, ops));
    CHECK(operators_agree(F_n(ops), WedgeOperator::sum(terms), 3));
  }
}

TEST_CASE("diagram suite for small n") {
  auto rep = verify_diagram_suite(4, -2, 2, 3);
  CHECK(rep.passed);
  CHECK(rep.signatures == 1 + 5 + 19 + 85);
}

TEST_CASE("large-r expansion of products of A operators") {
  using W = WedgeOperator;
  W L1 = W::alpha(1) * W::alpha(1);
  W L2 = W::scaled(Rational(1, 2), W::alpha(-1) * W::alpha(-1));
  for (int r : {7, 8}) {
    auto rep = verify_lemma_basic({0, 0}, r, L1, L2, 4);
    CHECK_MESSAGE(rep.passed(), (rep.failures.empty() ? std::string() : rep.failures[0]));
  }
  for (int r : {5, 6}) {
    auto rep = verify_lemma_basic({-1, -1}, r, W::alpha(3), W::alpha(-1), 2);
    CHECK_MESSAGE(rep.passed(), (rep.failures.empty() ? std::string() : rep.failures[0]));
    // [y1 y2] of f E_{-2}(y1 + y2) is C_P(r) times the z-coefficient of E_{-2}
    const Series& f = rep.f.at({0, 1});
    CHECK(f.coeff({1, 0}) + f.coeff({0, 1}) == coeff_CP({-1, -1}, Rational(r)));
    CHECK(f.coeff({0, 0}) == 0);
  }
  for (int r : {7, 8}) {
    CHECK(verify_lemma_basic({2, -1}, r, W::identity(), W::alpha(-1), 2).passed());
    CHECK(verify_lemma_basic({1, 0, -1}, r, W::alpha(1), W::alpha(-1), 1).passed());
  }
  CHECK_THROWS_AS(verify_lemma_basic({2, 1}, 3, W::alpha(3), W::identity(), 2), DomainError);
}
