#include "gwwedge/relative.hpp"

#include <numeric>
#include <sstream>

#include "gwwedge/errors.hpp"
#include "gwwedge/special.hpp"

namespace gwwedge {

using W = WedgeOperator;

// --------------------------------------------------------------- ContactData

int ContactData::degree() const { return std::accumulate(mu0.begin(), mu0.end(), 0); }

namespace {

std::vector<int> select(const std::vector<int>& v, bool positive) {
  std::vector<int> out;
  for (int x : v)
    if ((x > 0) == positive) out.push_back(x);
  return out;
}

Rational product_of(const std::vector<int>& v) {
  Rational p = 1;
  for (int x : v) p *= x;
  return p;
}

}  // namespace

std::vector<int> ContactData::positive0() const { return select(mu0, true); }
std::vector<int> ContactData::negative0() const { return select(mu0, false); }
std::vector<int> ContactData::positive_inf() const { return select(mu_inf, true); }
std::vector<int> ContactData::negative_inf() const { return select(mu_inf, false); }

void ContactData::validate() const {
  for (int x : mu0)
    if (x == 0) throw DomainError("contact orders must be nonzero");
  for (int x : mu_inf)
    if (x == 0) throw DomainError("contact orders must be nonzero");
  for (int k : insertions)
    if (k < 0) throw DomainError("descendant index must be non-negative");
  if (degree() <= 0) throw DomainError("contact orders over 0 must sum to a positive degree");
  if (tube) {
    int dinf = std::accumulate(mu_inf.begin(), mu_inf.end(), 0);
    if (dinf != degree()) throw DomainError("contact orders over 0 and infinity sum to different degrees");
  } else if (!mu_inf.empty()) {
    throw DomainError("cap data with contact orders over infinity");
  }
}

std::string ContactData::to_string() const {
  std::ostringstream os;
  auto list = [&](const std::vector<int>& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  };
  list(mu0);
  os << "|";
  for (std::size_t i = 0; i < insertions.size(); ++i) os << (i ? " " : "") << "tau" << insertions[i];
  if (tube) {
    os << "|";
    list(mu_inf);
  }
  return os.str();
}

// ---------------------------------------------------------- weights, brackets

int block_sum(const std::vector<int>& b, const std::vector<int>& block) {
  int s = 0;
  for (int i : block) s += b[static_cast<std::size_t>(i)];
  return s;
}

Rational N_weight(const std::vector<int>& b, const SetPartition& P) {
  Rational w = 1;
  for (const auto& block : P) {
    w *= factorial(static_cast<int>(block.size()) - 1);
    for (std::size_t i = 1; i < block.size(); ++i) w *= b[static_cast<std::size_t>(block[i])];
  }
  return w;
}

WedgeOperator negative_contact_block(const std::vector<int>& b) {
  if (b.empty()) return W::identity();
  std::vector<W> terms;
  for (const auto& P : set_partitions(static_cast<int>(b.size()))) {
    std::vector<W> factors;
    for (const auto& block : P) factors.push_back(W::e_coeff(block_sum(b, block), 0));
    terms.push_back(W::scaled(N_weight(b, P), W::product(std::move(factors))));
  }
  return W::sum(std::move(terms));
}

WedgeOperator nested_bracket(int a, const std::vector<int>& b, const SetPartition& P) {
  Rational coef = 1;
  int cur = a;
  for (const auto& block : P) {
    int k = block_sum(b, block);
    coef *= cur;
    cur += k;
    if (cur == 0) return W::zero();  // a multiple of the charge operator
  }
  return W::scaled(coef, W::alpha(cur));
}

WedgeOperator nested_bracket_literal(int a, const std::vector<int>& b, const SetPartition& P) {
  W acc = W::alpha(a);
  for (const auto& block : P) acc = W::commutator(acc, W::e_coeff(block_sum(b, block), 0));
  return acc;
}

LemmaReport verify_lemma_comb(int a, const std::vector<int>& b, int energy_cap) {
  LemmaReport report;
  int n = static_cast<int>(b.size());
  int total = a + std::accumulate(b.begin(), b.end(), 0);
  if (a <= 0 || total <= 0) throw DomainError("need a > 0 and a + sum b > 0");
  for (int x : b)
    if (x >= 0) throw DomainError("negative contact entries must be negative");
  std::vector<W> lhs_terms, reduced_terms;
  for (const auto& P : set_partitions(n)) {
    Rational N = N_weight(b, P);
    lhs_terms.push_back(W::scaled(N, nested_bracket_literal(a, b, P)));
    reduced_terms.push_back(W::scaled(N, nested_bracket(a, b, P)));
  }
  W lhs = W::sum(lhs_terms), reduced = W::sum(reduced_terms);
  W rhs = W::scaled(Rational(Rational(a) * power(Rational(total), n - 1)), W::alpha(total));
  RingPtr ring = scalar_ring();
  for (const auto& lambda : partitions_up_to(energy_cap)) {
    FockVector v = FockVector::basis(ring, lambda);
    FockVector l = apply(lhs, v), r = apply(rhs, v), m = apply(reduced, v);
    report.checks += 2;
    if (!(l == r) || !(m == r)) {
      report.passed = false;
      report.detail = "mismatch on " + lambda.to_string();
      return report;
    }
  }
  return report;
}

// ------------------------------------------------------------- closed forms

Rational cap_invariant(const ContactData& cd) {
  cd.validate();
  if (cd.tube) throw ConfigError("cap_invariant called with tube data");
  auto pos = cd.positive0();
  int d = cd.degree();
  std::vector<W> ops;
  for (int a : pos) ops.push_back(W::alpha(a));
  ops.push_back(negative_contact_block(cd.negative0()));
  for (int k : cd.insertions) ops.push_back(W::e_coeff(0, k));
  for (int i = 0; i < d; ++i) ops.push_back(W::alpha(-1));
  Rational v = vev(ops, scalar_ring()).constant_term();
  return v / (product_of(pos) * factorial(d));
}

Rational tube_invariant(const ContactData& cd) {
  cd.validate();
  if (!cd.tube) throw ConfigError("tube_invariant called with cap data");
  auto pos = cd.positive0(), pos_inf = cd.positive_inf();
  std::vector<W> ops;
  for (int a : pos) ops.push_back(W::alpha(a));
  ops.push_back(negative_contact_block(cd.negative0()));
  for (int k : cd.insertions) ops.push_back(W::e_coeff(0, k));
  ops.push_back(adjoint(negative_contact_block(cd.negative_inf())));
  for (int a : pos_inf) ops.push_back(W::alpha(-a));
  Rational v = vev(ops, scalar_ring()).constant_term();
  return v / (product_of(pos) * product_of(pos_inf));
}

Rational invariant(const ContactData& cd) { return cd.tube ? tube_invariant(cd) : cap_invariant(cd); }

namespace {

// sum over set partitions J of the negatives and injective block -> positive assignments
// with a_l + |b_J| > 0 of prod a_l (a_l + |b_J|)^{|J|-1} prod varsigma(...)
Series side_sum(const RingPtr& ring, const std::vector<int>& pos, const std::vector<int>& neg) {
  Series total(ring);
  LinearForm z = LinearForm::var(ring, "z");
  std::vector<SetPartition> parts =
      neg.empty() ? std::vector<SetPartition>{SetPartition{}} : set_partitions(static_cast<int>(neg.size()));
  for (const auto& J : parts) {
    const std::size_t s = J.size();
    std::vector<int> assign(s, -1);
    std::vector<char> used(pos.size(), 0);
    // recursive assignment of block i
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == s) {
        Rational coef = 1;
        Series prod = Series::constant(ring, 1);
        for (std::size_t q = 0; q < s; ++q) {
          int a = pos[static_cast<std::size_t>(assign[q])];
          int e = a + block_sum(neg, J[q]);
          coef *= Rational(a) * power(Rational(e), static_cast<int>(J[q].size()) - 1);
          prod = prod * varsigma(ring, z * Rational(e));
        }
        for (std::size_t t = 0; t < pos.size(); ++t)
          if (!used[t]) prod = prod * varsigma(ring, z * Rational(pos[t]));
        total += prod * coef;
        return;
      }
      for (std::size_t l = 0; l < pos.size(); ++l) {
        if (used[l]) continue;
        if (pos[l] + block_sum(neg, J[i]) <= 0) continue;
        used[l] = 1;
        assign[i] = static_cast<int>(l);
        self(self, i + 1);
        used[l] = 0;
      }
    };
    rec(rec, 0);
  }
  return total;
}

}  // namespace

Series one_point_tube_connected(const ContactData& cd, int order) {
  cd.validate();
  RingPtr work = make_ring({"z"}, {order + 1});
  Series numer = side_sum(work, cd.positive0(), cd.negative0());
  if (cd.tube) numer = numer * side_sum(work, cd.positive_inf(), cd.negative_inf());
  // divide by varsigma(z): shift down by one, multiply by z/varsigma(z)
  RingPtr ring = make_ring({"z"}, {order}, {-1});
  Series shifted(ring);
  for (const auto& [e, c] : numer.terms()) shifted.add_term({e[0] - 1}, c);
  Series inv_s = substitute(ring, inv_S_coeffs(order + 1), 0, LinearForm::var(ring, "z"));
  Series out = shifted * inv_s;
  Rational denom = product_of(cd.positive0()) * product_of(cd.positive_inf());
  return out * (1 / denom);
}

namespace {

std::vector<std::vector<W>> block_lists(const std::vector<int>& b, std::vector<Rational>& weights) {
  std::vector<std::vector<W>> out;
  weights.clear();
  if (b.empty()) {
    out.emplace_back();
    weights.push_back(1);
    return out;
  }
  for (const auto& P : set_partitions(static_cast<int>(b.size()))) {
    std::vector<W> ops;
    for (const auto& block : P) ops.push_back(W::e_coeff(block_sum(b, block), 0));
    out.push_back(std::move(ops));
    weights.push_back(N_weight(b, P));
  }
  return out;
}

template <class F>
Series one_point_generic(const ContactData& cd, int order, F&& expectation) {
  cd.validate();
  if (!cd.insertions.empty()) throw ConfigError("one-point function takes no further insertions");
  RingPtr ring = make_ring({"z"}, {order}, {-1});
  auto pos = cd.positive0(), pos_inf = cd.positive_inf();
  std::vector<Rational> w0, winf;
  auto lists0 = block_lists(cd.negative0(), w0);
  auto listsinf = block_lists(cd.negative_inf(), winf);
  Series total(ring);
  for (std::size_t p = 0; p < lists0.size(); ++p) {
    for (std::size_t q = 0; q < listsinf.size(); ++q) {
      std::vector<W> ops;
      for (int a : pos) ops.push_back(W::alpha(a));
      for (const auto& o : lists0[p]) ops.push_back(o);
      ops.push_back(W::e_series(0, LinearForm::var(ring, "z")));
      for (auto it = listsinf[q].rbegin(); it != listsinf[q].rend(); ++it) ops.push_back(adjoint(*it));
      if (cd.tube) {
        for (int a : pos_inf) ops.push_back(W::alpha(-a));
      } else {
        for (int i = 0; i < cd.degree(); ++i) ops.push_back(W::alpha(-1));
      }
      total += expectation(ops, ring) * (w0[p] * winf[q]);
    }
  }
  Rational denom = product_of(pos) * product_of(pos_inf);
  if (!cd.tube) denom *= factorial(cd.degree());
  return total * (1 / denom);
}

}  // namespace

Series one_point_tube_connected_vev(const ContactData& cd, int order) {
  return one_point_generic(cd, order, [](const std::vector<W>& ops, const RingPtr& ring) {
    return connected_vev(ops, ring);
  });
}

Series one_point_tube_disconnected(const ContactData& cd, int order) {
  return one_point_generic(cd, order, [](const std::vector<W>& ops, const RingPtr& ring) {
    return vev(ops, ring);
  });
}

Rational genus0_hodge(const std::vector<Rational>& a) {
  if (a.empty()) throw DomainError("genus zero Hodge integral needs at least one entry");
  if (a.size() == 1) return 1 / a[0];
  if (a.size() == 2) {
    if (a[0] + a[1] == 0) throw DomainError("two-point Hodge integral with a + b = 0");
    return a[0] * a[1] / (a[0] + a[1]);
  }
  Rational prod = 1, sum = 0;
  for (const auto& x : a) {
    prod *= x;
    sum += x;
  }
  int e = static_cast<int>(a.size()) - 3;
  if (sum == 0 && e > 0) return 0;
  return prod * power(sum, e);
}

Rational coeff_CP(const std::vector<int>& b_block, const Rational& r) {
  if (b_block.empty()) throw DomainError("empty block");
  SetPartition single{std::vector<int>(b_block.size())};
  std::iota(single[0].begin(), single[0].end(), 0);
  return N_weight(b_block, single) / power(r, static_cast<int>(b_block.size()));
}

DetCoeffCheck detcoeff_rederivation(int a, const std::vector<int>& b, const Rational& r) {
  const int m = static_cast<int>(b.size());
  const int d = a + std::accumulate(b.begin(), b.end(), 0);
  if (a <= 0 || d <= 0) throw DomainError("need a > 0 and a + sum b > 0");
  RingPtr ring = scalar_ring();
  Rational total = 0;
  for (const auto& P : set_partitions(m)) {
    std::vector<W> ops{W::scaled(Rational(1, a), W::alpha(a))};
    Rational weight;
    if (P.size() > 1) {
      weight = N_weight(b, P);
      for (const auto& block : P) ops.push_back(W::e_coeff(block_sum(b, block), 0));
    } else {
      weight = power(r, m) * coeff_CP(b, r);
      ops.push_back(W::e_coeff(block_sum(b, P[0]), 0));
    }
    ops.push_back(W::scaled(Rational(1, d), W::alpha(-d)));
    total += weight * vev(ops, ring).constant_term();
  }
  return DetCoeffCheck{total, power(Rational(d), m - 1)};
}

}  // namespace gwwedge
