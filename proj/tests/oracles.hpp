#pragma once
// Brute-force reference computations used only by the tests.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "gwwedge/partition.hpp"
#include "gwwedge/rational.hpp"

namespace oracle {

using gwwedge::Partition;
using gwwedge::Rational;

// ---- polynomials in n variables with integer coefficients
using Mono = std::vector<int>;
using Poly = std::map<Mono, long long>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Mono e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// chi^lambda_mu by the Frobenius formula: [x^{lambda + delta}] a_delta p_mu.
inline long long character(const Partition& lambda, const Partition& mu) {
  const int n = std::max(1, lambda.size());
  if (lambda.size() != mu.size()) return 0;
  if (lambda.length() > n) return 0;
  Poly p;
  p[Mono(static_cast<std::size_t>(n), 0)] = 1;
  for (int part : mu.parts()) {
    Poly pn;
    for (int i = 0; i < n; ++i) {
      Mono e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = part;
      pn[e] += 1;
    }
    p = mul(p, pn);
  }
  // a_delta = sum_sigma sign(sigma) x^{sigma(delta)}
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Mono target(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) target[static_cast<std::size_t>(i)] = lambda[i] + n - 1 - i;
  long long total = 0;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    // monomial x_i^{n-1-perm(i)}; need coefficient of target / that in p
    Mono need(static_cast<std::size_t>(n));
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      need[static_cast<std::size_t>(i)] =
          target[static_cast<std::size_t>(i)] - (n - 1 - perm[static_cast<std::size_t>(i)]);
      ok = ok && need[static_cast<std::size_t>(i)] >= 0;
    }
    if (!ok) continue;
    auto it = p.find(need);
    if (it != p.end()) total += (inversions % 2 ? -1 : 1) * it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// [z^{k+1}] of the E_0(z) eigenvalue on v_lambda:
// sum_i (e^{z(lambda_i - i + 1/2)} - e^{z(-i + 1/2)}) + 1/varsigma(z)
inline Rational e0_eigen(const Partition& lambda, int k, const std::vector<Rational>& inv_vs) {
  Rational total = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    Rational a(2 * (lambda[i - 1] - i) + 1, 2), b(2 * (-i) + 1, 2);
    a.canonicalize();
    b.canonicalize();
    Rational pa = 1, pb = 1;
    for (int m = 0; m < k + 1; ++m) {
      pa *= a;
      pb *= b;
    }
    total += (pa - pb) / factorial(k + 1);
  }
  // inv_vs[m] = [z^{m-1}] 1/varsigma
  if (k + 2 < static_cast<int>(inv_vs.size())) total += inv_vs[static_cast<std::size_t>(k + 2)];
  return total;
}

// 1/varsigma(z) Laurent coefficients from 2 sinh(z/2) = e^{z/2} - e^{-z/2}, solved directly.
inline std::vector<Rational> inv_varsigma_table(int n) {
  // varsigma(z)/z = sum c_m z^m with c_m = [z^{m+1}](e^{z/2} - e^{-z/2})
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    Rational half(1, 2);
    Rational a = 1;
    for (int i = 0; i < m + 1; ++i) a *= half;
    Rational b = (m + 1) % 2 == 0 ? a : Rational(-a);
    c[static_cast<std::size_t>(m)] = (a - b) / factorial(m + 1);
  }
  std::vector<Rational> inv(static_cast<std::size_t>(n + 1));
  // solve sum_{a+b=m} c_a inv_b = delta_{m0}
  for (int m = 0; m <= n; ++m) {
    Rational acc = m == 0 ? Rational(1) : Rational(0);
    for (int a = 1; a <= m; ++a) acc -= c[static_cast<std::size_t>(a)] * inv[static_cast<std::size_t>(m - a)];
    inv[static_cast<std::size_t>(m)] = acc / c[0];
  }
  return inv;  // inv[m] = [z^{m-1}] 1/varsigma(z)
}

inline Rational z_factor(const Partition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  Rational z = 1;
  for (auto [p, m] : mult) {
    z *= factorial(m);
    for (int i = 0; i < m; ++i) z *= p;
  }
  return z;
}

// <prod alpha_{mu_i} E_0[k] prod alpha_{-nu_j}> via characters; k < -2 means no E_0 factor.
inline Rational character_vev(const Partition& mu, int k, const Partition& nu) {
  if (mu.size() != nu.size()) return 0;
  auto inv = inv_varsigma_table(k + 4);
  Rational total = 0;
  for (const auto& lambda : gwwedge::partitions_of(mu.size())) {
    Rational w = Rational(static_cast<long>(character(lambda, mu) * character(lambda, nu)));
    if (w == 0) continue;
    total += k < -2 ? w : w * e0_eigen(lambda, k, inv);
  }
  return total;
}

// ---- explicit semi-infinite wedge on a window: occupied integer positions x (half-int x+1/2)
struct Wedge {
  std::set<int, std::greater<int>> occ;  // positions >= floor; all below floor occupied
  int floor = 0;
};

inline Wedge wedge_of(const Partition& l, int depth) {
  Wedge w;
  w.floor = -depth;
  for (int i = 1; i <= depth; ++i) w.occ.insert(l[i - 1] - i);
  return w;
}

inline Partition partition_of(const Wedge& w) {
  std::vector<int> parts;
  int i = 1;
  for (int x : w.occ) {
    int p = x + i;
    if (p > 0) parts.push_back(p);
    ++i;
  }
  return Partition(parts);
}

// psi_a psi_b^* with positions a, b (integers standing for a+1/2, b+1/2), a != b.
// Sign: psi_b^* removes b picking up (-1)^{#occupied above b}; psi_a inserts with (-1)^{#above a}.
inline std::optional<std::pair<Partition, int>> wedge_bilinear(int a, int b, const Partition& l) {
  int depth = l.length() + std::abs(a) + std::abs(b) + 4;
  Wedge w = wedge_of(l, depth);
  if (!w.occ.count(b)) return std::nullopt;
  int above_b = 0;
  for (int x : w.occ)
    if (x > b) ++above_b;
  w.occ.erase(b);
  if (w.occ.count(a)) return std::nullopt;
  int above_a = 0;
  for (int x : w.occ)
    if (x > a) ++above_a;
  w.occ.insert(a);
  int sign = ((above_a + above_b) % 2 == 0) ? 1 : -1;
  return std::make_pair(partition_of(w), sign);
}

}  // namespace oracle
