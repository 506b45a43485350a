#include "gwwedge/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "gwwedge/diagrams.hpp"
#include "gwwedge/equivariant.hpp"
#include "gwwedge/errors.hpp"
#include "gwwedge/expectation.hpp"
#include "gwwedge/johnson.hpp"
#include "gwwedge/relative.hpp"
#include "gwwedge/special.hpp"
#include "gwwedge/wdvv.hpp"

namespace gwwedge {

namespace {

using W = WedgeOperator;

constexpr std::size_t kMaxFailures = 8;

struct Tally {
  CriterionResult& res;
  void check(bool ok, const std::string& what) {
    ++res.checks;
    if (ok) return;
    res.passed = false;
    if (res.failures.size() < kMaxFailures) res.failures.push_back(what);
  }
};

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// all multisets of size <= n from {0..kmax}
std::vector<std::vector<int>> insertion_sets(int n, int kmax) {
  std::vector<std::vector<int>> out{{}};
  for (int size = 1; size <= n; ++size) {
    std::vector<int> cur(static_cast<std::size_t>(size), 0);
    while (true) {
      out.push_back(cur);
      int p = size - 1;
      while (p >= 0 && cur[static_cast<std::size_t>(p)] == kmax) --p;
      if (p < 0) break;
      int v = cur[static_cast<std::size_t>(p)] + 1;
      for (int q = p; q < size; ++q) cur[static_cast<std::size_t>(q)] = v;
    }
  }
  return out;
}

// all tuples in {lo..-1}^n
std::vector<std::vector<int>> negative_tuples(int n, int lo) {
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

// multisets of negative parts in {lo..-1} with at most n entries
std::vector<std::vector<int>> negative_multisets(int n, int lo) {
  std::vector<std::vector<int>> out{{}};
  for (int size = 1; size <= n; ++size)
    for (auto b : negative_tuples(size, lo))
      if (std::is_sorted(b.begin(), b.end())) out.push_back(b);
  return out;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// ------------------------------------------------------------------ 1

void commutation(Tally& t) {
  for (int j = -3; j <= 3; ++j)
    for (int k = -3; k <= 3; ++k) {
      const std::string tag = " j=" + std::to_string(j) + " k=" + std::to_string(k);
      t.check(verify_commutation(j, k, 6, 8).passed, "[E_j(z),E_k(w)]" + tag);
      if (j != 0 && k != 0) t.check(verify_alpha_commutation(j, k, 8).passed, "[alpha_j,alpha_k]" + tag);
      if (j != 0) t.check(verify_alpha_e0_commutation(j, k, 8).passed, "[alpha_j,E_k[0]]" + tag);
    }
}

// ------------------------------------------------------------------ 2

void lemma_comb(Tally& t, std::string& note) {
  long skipped = 0;
  for (int a = 1; a <= 4; ++a)
    for (int n = 1; n <= 3; ++n)
      for (const auto& b : negative_tuples(n, -2)) {
        int total = a;
        for (int x : b) total += x;
        if (total <= 0) {
          ++skipped;
          continue;
        }
        LemmaReport r = verify_lemma_comb(a, b, 6);
        t.check(r.passed, "a=" + std::to_string(a) + " b=" + join(b) + ": " + r.detail);
      }
  note = std::to_string(skipped) + " tuples with a + sum b <= 0 outside the lemma";
}

// ------------------------------------------------------------------ 3

std::vector<GradedOp> graded(const std::vector<int>& k, int r) {
  std::vector<GradedOp> ops;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const int b = static_cast<int>(i % 2);
    ops.push_back({W::e_coeff(-(k[i] * r + b), static_cast<int>(i % 3)), k[i], b});
  }
  return ops;
}

void diagrams(Tally& t, std::string& note) {
  DiagramSuiteReport rep = verify_diagram_suite(5, -2, 2, 3);
  t.check(rep.passed, "diagram suite: " + (rep.failures.empty() ? std::string() : rep.failures[0]));
  note = std::to_string(rep.signatures) + " signatures, " + std::to_string(rep.diagrams) + " diagrams, " +
         std::to_string(rep.operator_checks) + " operator identities";

  // R_1 R_0 R_0 R_{-1}
  const std::vector<int> k{-1, 0, 0, 1};
  auto K = enumerate_K(k);
  t.check(K.size() == 4, "K of (-1,0,0,1) has " + std::to_string(K.size()) + " diagrams");
  long connected = std::count_if(K.begin(), K.end(), [](const InteractionDiagram& J) { return J.connected(); });
  t.check(connected == 1, "K of (-1,0,0,1) should hold one connected diagram");
  InteractionDiagram chain;
  chain.vertices = {1, 2, 3, 4};
  chain.edges = {{2, 1}, {3, 2}, {4, 3}};
  t.check(std::find(K.begin(), K.end(), chain) != K.end(), "chain diagram missing from K");
  t.check(L_of_J_expression(chain, {"O1", "O2", "O3", "O4"}) == "[O1,[O2,[O3,O4]]]", "chain expression");
  auto ops = graded(k, 3);
  t.check(operators_agree(G_n_connected(ops), L_of_J(chain, ops), 4), "G_4 is not the chain bracket");

  W L1 = W::alpha(1) * W::alpha(1);
  W L2 = W::scaled(Rational(1, 2), W::alpha(-1) * W::alpha(-1));
  for (int r : {7, 8}) t.check(verify_lemma_basic({0, 0}, r, L1, L2, 4).passed(), "large-r expansion (0,0) r=" + std::to_string(r));
  for (int r : {5, 6})
    t.check(verify_lemma_basic({-1, -1}, r, W::alpha(3), W::alpha(-1), 2).passed(),
            "large-r expansion (-1,-1) r=" + std::to_string(r));
  for (int r : {7, 8})
    t.check(verify_lemma_basic({2, -1}, r, W::identity(), W::alpha(-1), 2).passed(),
            "large-r expansion (2,-1) r=" + std::to_string(r));
}

// ------------------------------------------------------------------ 4

std::vector<BasisClass> family_insertions(int a, const std::vector<int>& b, int d) {
  std::vector<BasisClass> ins{BasisClass::zero(a), BasisClass::inf(d)};
  for (int x : b) ins.push_back(BasisClass::zero(x));
  return ins;
}

void wdvv(Tally& t, std::string& note) {
  InvariantEvaluator ev;
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 3; ++n)
      for (const auto& b : negative_tuples(n, -3)) {
        int a = d;
        for (int x : b) a -= x;
        Rational v = ev.I(family_insertions(a, b, d), d);
        t.check(v == power(Rational(d), n - 1),
                "I_" + std::to_string(d) + " a=" + std::to_string(a) + " b=" + join(b) + " = " + to_string(v));
      }
  for (const auto& f : ev.solved())
    t.check(wdvv_residual(f.a, f.b, f.d) == 0, "residual at a=" + std::to_string(f.a) + " b=" + join(f.b) + " d=" + std::to_string(f.d));
  note = std::to_string(ev.solved().size()) + " WDVV instances solved";
}

// ------------------------------------------------------------------ 5

std::vector<ContactData> cross_pipeline_cases() {
  std::vector<ContactData> out;
  auto with_insertions = [&](ContactData cd) {
    for (const auto& ks : insertion_sets(2, 3)) {
      cd.insertions = ks;
      out.push_back(cd);
    }
  };
  for (int d = 1; d <= 3; ++d) {
    for (const auto& mu : partitions_of(d)) {
      ContactData cd;
      cd.mu0 = mu.parts();
      with_insertions(cd);
    }
    for (const auto& n0 : negative_multisets(2, -2))
      for (const auto& ninf : negative_multisets(2, -2)) {
        if (n0.size() + ninf.size() > 2) continue;
        int s0 = d, sinf = d;
        for (int x : n0) s0 -= x;
        for (int x : ninf) sinf -= x;
        for (const auto& p0 : partitions_of(s0))
          for (const auto& pinf : partitions_of(sinf)) {
            ContactData cd;
            cd.tube = true;
            cd.mu0 = concat(p0.parts(), n0);
            cd.mu_inf = concat(pinf.parts(), ninf);
            with_insertions(cd);
          }
      }
  }
  return out;
}

void cross_pipeline(Tally& t, std::string& note) {
  long limits = 0, one_point = 0;
  for (const auto& cd : cross_pipeline_cases()) {
    const std::string tag = cd.to_string();
    const Rational closed = invariant(cd);
    LimitResult lr;
    try {
      lr = relative_via_limit(cd);
    } catch (const std::exception& e) {
      t.check(false, tag + ": " + e.what());
      continue;
    }
    ++limits;
    t.check(lr.value == closed, tag + ": orbifold limit " + to_string(lr.value) + " vs operator formula " + to_string(closed));
    // samples R..R+3, R the smallest admissible r
    bool flat = lr.polynomial.size() <= 1;
    for (std::size_t i = 1; i < 4 && i < lr.values.size(); ++i) flat = flat && lr.values[i] == lr.values[0];
    t.check(flat, tag + ": bracket depends on r");
    if (!cd.tube || !cd.insertions.empty()) continue;
    const int order = 6;
    Series conn = one_point_tube_connected(cd, order);
    Series cum = one_point_tube_connected_vev(cd, order);
    t.check(conn.truncated(0, order - 1) == cum.truncated(0, order - 1), tag + ": connected one-point function");
    Series disc = one_point_tube_disconnected(cd, order);
    for (int k = 0; k <= 3; ++k) {
      ContactData with = cd;
      with.insertions = {k};
      t.check(disc.coeff({k + 1}) == tube_invariant(with), with.to_string() + ": disconnected one-point coefficient");
    }
    ++one_point;
  }
  note = std::to_string(limits) + " contact data through the orbifold limit, " + std::to_string(one_point) +
         " one-point functions";
}

// ------------------------------------------------------------------ 6

void no_negative(Tally& t) {
  const int order = 7;
  RingPtr ring = make_ring({"z"}, {order}, {-1});
  LinearForm z = LinearForm::var(ring, "z");
  for (int d = 1; d <= 4; ++d)
    for (const auto& mu : partitions_of(d))
      for (const auto& nu : partitions_of(d)) {
        ContactData cd;
        cd.tube = true;
        cd.mu0 = mu.parts();
        cd.mu_inf = nu.parts();
        Series want = inv_varsigma(ring, z);
        Rational denom = 1;
        for (int a : concat(mu.parts(), nu.parts())) {
          want = want * varsigma(ring, z * Rational(a));
          denom *= a;
        }
        want = want * (1 / denom);
        Series got = one_point_tube_connected(cd, order).in_ring(ring);
        t.check(got.truncated(0, order) == want.truncated(0, order), cd.to_string());
      }
  ContactData one;
  one.tube = true;
  one.mu0 = one.mu_inf = {1};
  Series f = one_point_tube_connected(one, order);
  t.check(f.coeff({1}) == 1 && f.coeff({2}) == 0 && f.coeff({3}) == Rational(1, 24), "(1)|(1) coefficients");
}

// ------------------------------------------------------------------ 7

void cap_tube(Tally& t) {
  for (int d = 1; d <= 3; ++d)
    for (const auto& mu : partitions_of(d))
      for (const auto& ks : insertion_sets(2, 3)) {
        ContactData cap;
        cap.mu0 = mu.parts();
        cap.insertions = ks;
        ContactData tube = cap;
        tube.tube = true;
        tube.mu_inf = std::vector<int>(static_cast<std::size_t>(d), 1);
        t.check(tube_invariant(tube) == factorial(d) * cap_invariant(cap), tube.to_string());
      }
}

// ------------------------------------------------------------------ 8

int max_t_degree(const Series& s) {
  int idx = s.ring()->index_of("t"), best = 0;
  for (const auto& [e, c] : s.terms()) best = std::max(best, e[static_cast<std::size_t>(idx)]);
  return best;
}

Series renamed(const Series& s, const RingPtr& target, const std::map<std::string, std::string>& map, bool flip_t) {
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

void equivariant(Tally& t) {
  const std::vector<std::vector<int>> small{{1}, {2}, {1, 1}, {2, 1}};
  // t-degree at most n - 1 with n interior insertions
  for (const auto& mu : small)
    for (int n = 1; n <= 3; ++n) {
      auto g = eq_cap_gf(mu, n, 0, 3);
      bool ok = max_t_degree(g.regular) <= n - 1;
      for (const auto& u : g.unstable) ok = ok && max_t_degree(u.coefficient) <= n - 1;
      t.check(ok, "t-degree of the cap function " + join(mu) + " n=" + std::to_string(n));
    }
  for (int d = 1; d <= 2; ++d)
    for (const auto& mu : partitions_of(d))
      for (const auto& nu : partitions_of(d)) {
        auto g = eq_tube_gf(mu.parts(), nu.parts(), 2, 0, 4);
        bool ok = max_t_degree(g.regular) <= 1;
        for (const auto& u : g.unstable) ok = ok && max_t_degree(u.coefficient) <= 1;
        t.check(ok, "t-degree of the tube function " + join(mu.parts()) + "|" + join(nu.parts()));
      }

  // t -> 0 against the non-equivariant tube
  const int order = 4;
  for (int d = 1; d <= 2; ++d)
    for (const auto& mu : partitions_of(d))
      for (const auto& nu : partitions_of(d))
        for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 0}}) {
          auto g = eq_tube_gf(mu.parts(), nu.parts(), n, m, order);
          for (const auto& u : g.unstable)
            t.check(u.coefficient.coefficient_of(u.coefficient.ring()->size() - 1, 0).is_zero(),
                    "unstable term survives t = 0");
          const int n2 = n + m == 2 ? order : 1;
          for (int k1 = 0; k1 < order; ++k1)
            for (int k2 = 0; k2 < n2; ++k2) {
              Exponents e(static_cast<std::size_t>(n + m + 1), 0);
              e[0] = k1 + 1;
              ContactData cd;
              cd.tube = true;
              cd.mu0 = mu.parts();
              cd.mu_inf = nu.parts();
              cd.insertions = {k1};
              if (n + m == 2) {
                e[1] = k2 + 1;
                cd.insertions.push_back(k2);
              }
              t.check(g.regular.coeff(e) == tube_invariant(cd), cd.to_string() + " at t = 0");
            }
        }

  // adjoint symmetry between the two cap formulas
  for (const auto& mu : small)
    for (int n = 0; n <= 2; ++n) {
      auto cap = eq_cap_gf(mu, n, 1, order);
      auto inf = eq_cap_infinity_gf(mu, 1, n, order);
      std::map<std::string, std::string> names{{"w1", "z1"}};
      for (int i = 1; i <= n; ++i) names["z" + std::to_string(i)] = "w" + std::to_string(i);
      bool ok = renamed(cap.regular, inf.regular.ring(), names, true) == inf.regular &&
                cap.unstable.size() == inf.unstable.size();
      for (std::size_t i = 0; ok && i < cap.unstable.size(); ++i)
        ok = renamed(cap.unstable[i].coefficient, inf.regular.ring(), names, true) == inf.unstable[i].coefficient;
      t.check(ok, "adjoint symmetry " + join(mu) + " n=" + std::to_string(n));
    }
}

// ------------------------------------------------------------------ 9

void integrity(Tally& t, std::string& note) {
  long brackets = 0;
  for (int d = 1; d <= 2; ++d)
    for (const auto& n0 : negative_multisets(1, -2))
      for (const auto& ninf : negative_multisets(1, -1)) {
        int s0 = d, sinf = d;
        for (int x : n0) s0 -= x;
        for (int x : ninf) sinf -= x;
        for (const auto& p0 : partitions_of(s0))
          for (const auto& pinf : partitions_of(sinf))
            for (const auto& ks : insertion_sets(1, 2)) {
              ContactData cd;
              cd.tube = true;
              cd.mu0 = concat(p0.parts(), n0);
              cd.mu_inf = concat(pinf.parts(), ninf);
              cd.insertions = ks;
              const int r = smallest_admissible_r(cd);
              OrbifoldRequest q;
              q.r = q.s = r;
              q.d = d;
              q.left = ages_of(cd.mu0, r, cd.insertions);
              q.right = ages_of(cd.mu_inf, r);
              Rational t0 = orbifold_bracket(q).constant_term();
              q.mode = EquivariantMode::Full;
              q.t_degree = 2;
              try {
                Series full = orbifold_bracket(q);
                t.check(full.coeff({0}) == t0, cd.to_string() + ": full bracket at t = 0");
              } catch (const IntegrityError& e) {
                t.check(false, cd.to_string() + ": " + e.what());
              }
              ++brackets;
            }
      }
  note = std::to_string(brackets) + " full-mode brackets";
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names{"commutation", "lemma_comb",   "diagrams",
                                              "wdvv",        "cross_pipeline", "no_negative",
                                              "cap_tube",    "equivariant",  "integrity"};
  return names;
}

CriterionResult run_criterion(int id) {
  CriterionResult res;
  res.id = id;
  if (id < 1 || id > static_cast<int>(criterion_names().size())) {
    res.passed = false;
    res.failures.push_back("no criterion " + std::to_string(id));
    return res;
  }
  res.name = criterion_names()[static_cast<std::size_t>(id - 1)];
  Tally t{res};
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: commutation(t); break;
      case 2: lemma_comb(t, res.note); break;
      case 3: diagrams(t, res.note); break;
      case 4: wdvv(t, res.note); break;
      case 5: cross_pipeline(t, res.note); break;
      case 6: no_negative(t); break;
      case 7: cap_tube(t); break;
      case 8: equivariant(t); break;
      case 9: integrity(t, res.note); break;
    }
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<CriterionResult> run_suite(const std::string& which) {
  std::vector<CriterionResult> out;
  const auto& names = criterion_names();
  for (int id = 1; id <= static_cast<int>(names.size()); ++id)
    if (which == "all" || which == names[static_cast<std::size_t>(id - 1)] || which == std::to_string(id))
      out.push_back(run_criterion(id));
  if (out.empty()) throw ConfigError("unknown suite '" + which + "'");
  return out;
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.name << ": " << r.checks << " checks";
  os.setf(std::ios::fixed);
  os.precision(1);
  os << ", " << r.seconds << "s";
  if (!r.note.empty()) os << " (" << r.note << ")";
  for (const auto& f : r.failures) os << "\n    " << f;
  return os.str();
}

}  // namespace gwwedge
