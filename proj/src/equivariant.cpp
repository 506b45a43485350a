#include "gwwedge/equivariant.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gwwedge/errors.hpp"
#include "gwwedge/expectation.hpp"
#include "gwwedge/set_partitions.hpp"
#include "gwwedge/special.hpp"

namespace gwwedge {

using W = WedgeOperator;
using PairList = std::vector<std::pair<std::string, std::string>>;
using TermList = std::vector<std::pair<PairList, WedgeOperator>>;

std::string EquivariantSeries::to_string() const {
  std::ostringstream os;
  os << regular.to_string();
  for (const auto& u : unstable) {
    os << " + (";
    for (std::size_t i = 0; i < u.pairs.size(); ++i)
      os << (i ? " " : "") << u.pairs[i].first << "*" << u.pairs[i].second << "/vs(" << u.pairs[i].first << "+"
         << u.pairs[i].second << ")";
    os << ")*(" << u.coefficient.to_string() << ")";
  }
  return os.str();
}

namespace {

std::vector<std::string> names(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<std::string> all_names(int n, int m) {
  auto v = names("z", n);
  for (auto& w : names("w", m)) v.push_back(w);
  v.push_back("t");
  return v;
}

}  // namespace

RingPtr equivariant_ring(int n, int m, int order, int t_degree) {
  std::vector<int> mx(static_cast<std::size_t>(n + m), order), mn(static_cast<std::size_t>(n + m), -1);
  mx.push_back(t_degree);
  mn.push_back(0);
  return make_ring(all_names(n, m), mx, mn);
}

TermList e_block_terms(const RingPtr& ring, const std::vector<std::string>& vars, const Series& s) {
  const int n = static_cast<int>(vars.size());
  if (n == 0) return {{PairList{}, W::identity()}};
  int total_order = 0;
  for (std::size_t i = 0; i < ring->size(); ++i) total_order += ring->max_exp(i);
  std::map<PairList, std::vector<W>> grouped;
  for (const auto& pi : set_partitions(n)) {
    std::vector<std::size_t> pair_blocks;
    for (std::size_t b = 0; b < pi.size(); ++b)
      if (pi[b].size() == 2) pair_blocks.push_back(b);
    Series weight = s.pow(n - static_cast<int>(pi.size()));
    for (unsigned mask = 0; mask < (1u << pair_blocks.size()); ++mask) {
      PairList pairs;
      std::vector<W> factors;
      for (std::size_t b = 0; b < pi.size(); ++b) {
        const auto& block = pi[b];
        LinearForm sum = LinearForm::zero(ring);
        Series prod = Series::constant(ring, 1);
        for (int i : block) {
          sum = sum + LinearForm::var(ring, vars[static_cast<std::size_t>(i)]);
          prod = prod * Series::variable(ring, vars[static_cast<std::size_t>(i)]);
        }
        const int k = static_cast<int>(block.size());
        if (k == 1) {
          factors.push_back(W::e_series(0, sum));
          continue;
        }
        Series T = prod * Series::linear(ring, sum).pow(k - 2);
        W op = W::scaled(T, W::e_series(0, sum, false));
        if (k == 2) {
          auto it = std::find(pair_blocks.begin(), pair_blocks.end(), b);
          if (mask & (1u << (it - pair_blocks.begin()))) {
            pairs.emplace_back(vars[static_cast<std::size_t>(block[0])], vars[static_cast<std::size_t>(block[1])]);
            continue;
          }
          factors.push_back(op);
          continue;
        }
        // T(x) / varsigma(|x|) = x_1..x_k |x|^{k-3} h(|x|), h(y) = y / varsigma(y)
        Series delta = prod * Series::linear(ring, sum).pow(k - 3) * substitute(ring, inv_S_coeffs(total_order), 0, sum);
        factors.push_back(W::sum({op, W::scaled(delta, W::identity())}));
      }
      grouped[pairs].push_back(W::scaled(weight, W::product(std::move(factors))));
    }
  }
  TermList out;
  for (auto& [pairs, ops] : grouped) out.emplace_back(pairs, W::sum(std::move(ops)));
  return out;
}

WedgeOperator a_operator(const RingPtr& ring, const std::string& var, int kmin, int kmax, bool dual) {
  if (kmin < 0) throw ConfigError("A(z) terms with negative k are not series in z");
  LinearForm z = LinearForm::var(ring, var);
  Series tz = Series::variable(ring, "t") * Series::variable(ring, var);
  if (dual) tz = -tz;
  Series pre = S_power(ring, z, tz);
  Series vs = varsigma(ring, z);
  std::vector<W> terms;
  for (int k = kmin; k <= kmax; ++k) {
    Series c = pre * vs.pow(k) * pochhammer_reciprocal(tz, k);
    terms.push_back(W::scaled(c, W::e_series(dual ? -k : k, z)));
  }
  return W::sum(std::move(terms));
}

namespace {

int sum_of(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) {
    if (x <= 0) throw DomainError("equivariant formulas take positive contact orders");
    s += x;
  }
  return s;
}

// ring with one extra order of slack for the 1/varsigma poles
RingPtr work_ring(int n, int m, int order, int t_degree) { return equivariant_ring(n, m, order + 2, t_degree); }

EquivariantSeries finish(const std::map<PairList, Series>& acc, int n, int m, int order, int t_degree) {
  RingPtr out = equivariant_ring(n, m, order, t_degree);
  EquivariantSeries res{Series(out), {}};
  for (const auto& [pairs, s] : acc) {
    Series t = s.in_ring(out);
    if (pairs.empty()) {
      res.regular = t;
    } else if (!t.is_zero()) {
      res.unstable.push_back(UnstableTerm{pairs, t});
    }
  }
  return res;
}

TermList cross(const TermList& a, const TermList& b) {
  TermList out;
  for (const auto& [pa, oa] : a)
    for (const auto& [pb, ob] : b) {
      PairList p = pa;
      p.insert(p.end(), pb.begin(), pb.end());
      out.emplace_back(p, W::product({oa, ob}));
    }
  return out;
}

void check_counts(int n, int m, int order) {
  if (n < 0 || m < 0 || order < 0) throw ConfigError("negative insertion count or order");
}

}  // namespace

EquivariantSeries eq_cap_gf(const std::vector<int>& mu, int n, int m, int order) {
  check_counts(n, m, order);
  if (m > 1) throw UnsupportedConfiguration("more than one A^* insertion gives a Laurent series in the w's");
  const int d = sum_of(mu);
  const int tdeg = n + m * (order + 4);
  RingPtr ring = work_ring(n, m, order, tdeg);
  Series t = Series::variable(ring, "t");
  std::map<PairList, Series> acc;
  for (const auto& [pairs, eop] : e_block_terms(ring, names("z", n), t)) {
    std::vector<W> ops;
    for (int a : mu) ops.push_back(W::scaled(Rational(1, a), W::alpha(a)));
    ops.push_back(eop);
    ops.push_back(W::exp_alpha(Rational(1), -1));
    if (m == 1) ops.push_back(a_operator(ring, "w1", 0, d, true));
    Series v = vev(ops, ring);
    auto [it, fresh] = acc.try_emplace(pairs, v);
    if (!fresh) it->second += v;
  }
  return finish(acc, n, m, order, tdeg);
}

EquivariantSeries eq_tube_gf(const std::vector<int>& mu, const std::vector<int>& nu, int n, int m, int order) {
  check_counts(n, m, order);
  if (sum_of(mu) != sum_of(nu)) throw DomainError("contact orders sum to different degrees");
  const int tdeg = n + m;
  RingPtr ring = work_ring(n, m, order, tdeg);
  Series t = Series::variable(ring, "t");
  std::map<PairList, Series> acc;
  for (const auto& [pairs, eop] :
       cross(e_block_terms(ring, names("z", n), t), e_block_terms(ring, names("w", m), -t))) {
    std::vector<W> ops;
    for (int a : mu) ops.push_back(W::scaled(Rational(1, a), W::alpha(a)));
    ops.push_back(eop);
    for (int a : nu) ops.push_back(W::scaled(Rational(1, a), W::alpha(-a)));
    Series v = vev(ops, ring);
    auto [it, fresh] = acc.try_emplace(pairs, v);
    if (!fresh) it->second += v;
  }
  return finish(acc, n, m, order, tdeg);
}

EquivariantSeries eq_cap_infinity_gf(const std::vector<int>& nu, int n, int m, int order) {
  check_counts(n, m, order);
  if (n > 1) throw UnsupportedConfiguration("more than one A insertion gives a Laurent series in the z's");
  const int d = sum_of(nu);
  const int tdeg = m + n * (order + 4);
  RingPtr ring = work_ring(n, m, order, tdeg);
  Series t = Series::variable(ring, "t");
  std::map<PairList, Series> acc;
  for (const auto& [pairs, eop] : e_block_terms(ring, names("w", m), -t)) {
    std::vector<W> ops;
    if (n == 1) ops.push_back(a_operator(ring, "z1", 0, d, false));
    ops.push_back(W::exp_alpha(Rational(1), 1));
    ops.push_back(eop);
    for (int a : nu) ops.push_back(W::scaled(Rational(1, a), W::alpha(-a)));
    Series v = vev(ops, ring);
    auto [it, fresh] = acc.try_emplace(pairs, v);
    if (!fresh) it->second += v;
  }
  return finish(acc, n, m, order, tdeg);
}

}  // namespace gwwedge
