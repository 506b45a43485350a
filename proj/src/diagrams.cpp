#include "gwwedge/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "gwwedge/errors.hpp"
#include "gwwedge/expectation.hpp"
#include "gwwedge/johnson.hpp"
#include "gwwedge/partition.hpp"
#include "gwwedge/set_partitions.hpp"
#include "gwwedge/special.hpp"

namespace gwwedge {

using W = WedgeOperator;

GradedOp bracket(const GradedOp& x, const GradedOp& y) {
  return {W::commutator(x.op, y.op), x.k + y.k, x.b + y.b};
}

void InteractionDiagram::validate() const {
  std::map<int, int> out;
  for (const auto& [j, i] : edges) {
    if (!std::binary_search(vertices.begin(), vertices.end(), j) ||
        !std::binary_search(vertices.begin(), vertices.end(), i))
      throw DomainError("edge endpoint outside the vertex set");
    if (j <= i) throw DomainError("edge (j, i) needs j > i");
    if (++out[j] > 1) throw DomainError("vertex with two outgoing edges");
  }
}

std::vector<InteractionDiagram> InteractionDiagram::components() const {
  std::map<int, int> root;
  for (int v : vertices) root[v] = v;
  std::function<int(int)> find = [&](int v) { return root[v] == v ? v : root[v] = find(root[v]); };
  for (const auto& [j, i] : edges) root[find(j)] = find(i);
  std::map<int, InteractionDiagram> by_root;
  for (int v : vertices) by_root[find(v)].vertices.push_back(v);
  for (const auto& e : edges) by_root[find(e.first)].edges.push_back(e);
  std::vector<InteractionDiagram> out;
  for (auto& [r, c] : by_root) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(),
            [](const InteractionDiagram& x, const InteractionDiagram& y) { return x.vertices[0] < y.vertices[0]; });
  return out;
}

bool InteractionDiagram::connected() const { return components().size() <= 1; }

std::string InteractionDiagram::to_json() const {
  std::ostringstream os;
  os << "{\"vertices\":[";
  for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : "") << vertices[i];
  os << "],\"edges\":[";
  for (std::size_t i = 0; i < edges.size(); ++i)
    os << (i ? "," : "") << "[" << edges[i].first << "," << edges[i].second << "]";
  os << "]}";
  return os.str();
}

std::vector<InteractionDiagram> all_diagrams(int n) {
  std::vector<InteractionDiagram> out;
  InteractionDiagram base;
  for (int v = 1; v <= n; ++v) base.vertices.push_back(v);
  std::function<void(int, std::vector<std::pair<int, int>>&)> rec = [&](int j, std::vector<std::pair<int, int>>& e) {
    if (j > n) {
      InteractionDiagram d = base;
      d.edges = e;
      std::sort(d.edges.begin(), d.edges.end());
      out.push_back(std::move(d));
      return;
    }
    rec(j + 1, e);
    for (int i = 1; i < j; ++i) {
      e.emplace_back(j, i);
      rec(j + 1, e);
      e.pop_back();
    }
  };
  std::vector<std::pair<int, int>> e;
  rec(1, e);
  return out;
}

namespace {

int total(const std::vector<int>& k) { return std::accumulate(k.begin(), k.end(), 0); }

W F_rec(const std::vector<GradedOp>& ops) {
  if (ops[0].k > 0) return W::zero();
  std::size_t i0 = 0;
  while (i0 < ops.size() && ops[i0].k <= 0) ++i0;
  if (i0 == ops.size()) {
    std::vector<W> f;
    for (const auto& o : ops) f.push_back(o.op);
    return W::product(std::move(f));
  }
  std::vector<W> terms;
  for (std::size_t j = 0; j < i0; ++j) {
    std::vector<GradedOp> next = ops;
    next[j] = bracket(ops[j], ops[i0]);
    next.erase(next.begin() + static_cast<long>(i0));
    terms.push_back(F_rec(next));
  }
  return W::sum(std::move(terms));
}

}  // namespace

WedgeOperator F_n(const std::vector<GradedOp>& ops) {
  if (ops.empty()) return W::identity();
  int s = 0;
  for (const auto& o : ops) s += o.k;
  if (s != 0) throw DomainError("r-energies must sum to zero");
  return F_rec(ops);
}

std::vector<InteractionDiagram> recursion_diagrams(const std::vector<int>& k) {
  if (total(k) != 0) throw DomainError("r-energies must sum to zero");
  std::vector<InteractionDiagram> out;
  const int n = static_cast<int>(k.size());
  std::function<void(std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>&)> rec =
      [&](std::vector<std::pair<int, int>> cur, std::vector<std::pair<int, int>>& edges) {
        if (cur.empty() || cur[0].second > 0) return;
        std::size_t i0 = 0;
        while (i0 < cur.size() && cur[i0].second <= 0) ++i0;
        if (i0 == cur.size()) {
          InteractionDiagram d;
          for (int v = 1; v <= n; ++v) d.vertices.push_back(v);
          d.edges = edges;
          std::sort(d.edges.begin(), d.edges.end());
          out.push_back(std::move(d));
          return;
        }
        for (std::size_t j = 0; j < i0; ++j) {
          auto next = cur;
          next[j].second += cur[i0].second;
          next.erase(next.begin() + static_cast<long>(i0));
          edges.emplace_back(cur[i0].first, cur[j].first);
          rec(next, edges);
          edges.pop_back();
        }
      };
  std::vector<std::pair<int, int>> cur, edges;
  for (int v = 1; v <= n; ++v) cur.emplace_back(v, k[static_cast<std::size_t>(v - 1)]);
  rec(cur, edges);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// One readout step: smallest vertex with one outgoing and no incoming edge.
template <class Combine>
void readout(const InteractionDiagram& J, Combine&& combine) {
  J.validate();
  auto edges = J.edges;
  while (!edges.empty()) {
    std::map<int, int> in, out;
    for (const auto& [j, i] : edges) {
      ++out[j];
      ++in[i];
    }
    int a = -1, b = -1;
    for (const auto& [j, i] : edges)
      if (!in.count(j) && (a < 0 || j < a)) {
        a = j;
        b = i;
      }
    combine(a, b);
    edges.erase(std::find(edges.begin(), edges.end(), std::make_pair(a, b)));
  }
}

}  // namespace

WedgeOperator L_of_J(const InteractionDiagram& J, const std::vector<GradedOp>& ops) {
  std::map<int, W> at;
  for (int v : J.vertices) {
    if (v < 1 || v > static_cast<int>(ops.size())) throw DomainError("vertex without an operator");
    at.emplace(v, ops[static_cast<std::size_t>(v - 1)].op);
  }
  readout(J, [&](int a, int b) {
    at.at(b) = W::commutator(at.at(b), at.at(a));
    at.erase(a);
  });
  std::vector<W> f;
  for (auto& [v, op] : at) f.push_back(op);
  return W::product(std::move(f));
}

std::string L_of_J_expression(const InteractionDiagram& J, const std::vector<std::string>& names) {
  std::map<int, std::string> at;
  for (int v : J.vertices) at[v] = names.at(static_cast<std::size_t>(v - 1));
  readout(J, [&](int a, int b) {
    at[b] = "[" + at[b] + "," + at[a] + "]";
    at.erase(a);
  });
  std::string s;
  for (auto& [v, e] : at) s += e;
  return s;
}

bool is_valid(const InteractionDiagram& J, const std::vector<int>& k) {
  if (J.vertices.size() != k.size()) throw DomainError("label count differs from the vertex count");
  std::map<int, int> label;
  for (std::size_t i = 0; i < k.size(); ++i) label[J.vertices[i]] = k[i];
  bool ok = true;
  readout(J, [&](int a, int b) {
    if (!ok) return;
    int first_positive = -1;
    for (const auto& [v, l] : label)
      if (l > 0) {
        first_positive = v;
        break;
      }
    const bool step_b = first_positive == a;
    const bool step_a = label.begin()->second <= 0;
    if (step_b && !step_a) throw IntegrityError("a step moving the first positive factor has a positive front factor");
    if (!step_a || !step_b) ok = false;
    label[b] += label[a];
    label.erase(a);
  });
  if (!ok) return false;
  for (const auto& [v, l] : label)
    if (l != 0) return false;
  return true;
}

std::vector<InteractionDiagram> enumerate_K(const std::vector<int>& k) {
  std::vector<InteractionDiagram> out;
  for (auto& J : all_diagrams(static_cast<int>(k.size())))
    if (is_valid(J, k)) out.push_back(std::move(J));
  std::sort(out.begin(), out.end());
  return out;
}

WedgeOperator G_n_connected(const std::vector<GradedOp>& ops) {
  std::vector<int> k;
  for (const auto& o : ops) k.push_back(o.k);
  if (total(k) != 0) return W::zero();
  std::vector<W> terms;
  for (const auto& J : enumerate_K(k))
    if (J.connected()) terms.push_back(L_of_J(J, ops));
  return W::sum(std::move(terms));
}

bool component_criterion_holds(const InteractionDiagram& J, const std::vector<int>& k) {
  bool all = true;
  for (const auto& c : J.components()) {
    std::map<int, int> rename;
    std::vector<int> sub;
    InteractionDiagram d;
    for (int v : c.vertices) {
      rename[v] = static_cast<int>(d.vertices.size()) + 1;
      d.vertices.push_back(rename[v]);
      sub.push_back(k[static_cast<std::size_t>(v - 1)]);
    }
    for (const auto& [j, i] : c.edges) d.edges.emplace_back(rename[j], rename[i]);
    std::sort(d.edges.begin(), d.edges.end());
    all = all && is_valid(d, sub);
  }
  return is_valid(J, k) == all;
}

bool operators_agree(const WedgeOperator& x, const WedgeOperator& y, int cap) {
  RingPtr ring = scalar_ring();
  for (const auto& l : partitions_up_to(cap)) {
    FockVector v = FockVector::basis(ring, l);
    if (apply(x, v) != apply(y, v)) return false;
  }
  return true;
}

DiagramSuiteReport verify_diagram_suite(int max_n, int lo, int hi, int operator_cap) {
  DiagramSuiteReport rep;
  constexpr int r = 2;
  auto fail = [&](const std::vector<int>& k, const std::string& what) {
    rep.passed = false;
    std::ostringstream os;
    os << what << " at labels (";
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << ")";
    rep.failures.push_back(os.str());
  };
  for (int n = 1; n <= max_n; ++n) {
    const auto diagrams = all_diagrams(n);
    std::vector<int> k(static_cast<std::size_t>(n), lo);
    while (true) {
      if (total(k) == 0) {
        ++rep.signatures;
        auto K = enumerate_K(k);
        rep.diagrams += static_cast<long>(K.size());
        if (K != recursion_diagrams(k)) fail(k, "valid set differs from the recursion");
        for (const auto& J : diagrams)
          if (!component_criterion_holds(J, k)) fail(k, "component criterion fails for " + J.to_json());
        if (operator_cap >= 0) {
          std::vector<GradedOp> ops;
          for (int i = 0; i < n; ++i) {
            const int b = (i % 3) - 1;
            const int kk = k[static_cast<std::size_t>(i)];
            ops.push_back({W::e_coeff(-(kk * r + b), i % 2), kk, b});
          }
          std::vector<W> terms;
          for (const auto& J : K) terms.push_back(L_of_J(J, ops));
          ++rep.operator_checks;
          if (!operators_agree(F_n(ops), W::sum(std::move(terms)), operator_cap)) fail(k, "F_n differs from sum L(J)");
        }
      }
      int p = n - 1;
      while (p >= 0 && k[static_cast<std::size_t>(p)] == hi) k[static_cast<std::size_t>(p--)] = lo;
      if (p < 0) break;
      ++k[static_cast<std::size_t>(p)];
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

class LemmaBasic {
 public:
  LemmaBasic(std::vector<int> a, int r, W L1, W L2, int order)
      : a_(std::move(a)), n_(static_cast<int>(a_.size())), r_(r), L1_(std::move(L1)), L2_(std::move(L2)),
        order_(order) {
    std::vector<std::string> names;
    for (int i = 1; i <= n_; ++i) names.push_back("z" + std::to_string(i));
    ring_ = make_ring(names, std::vector<int>(a_.size(), order_ + kSlack), std::vector<int>(a_.size(), -1));
    out_ring_ = make_ring(names, std::vector<int>(a_.size(), order_), std::vector<int>(a_.size(), -1));
    v2_ = apply(L2_, FockVector::vacuum(scalar_ring()));
    if (v2_.is_zero()) throw DomainError("L2 annihilates the vacuum");
    if (v2_.min_energy() != v2_.max_energy()) throw DomainError("L2 v_0 is not of one energy");
    EnergyRange er = L1_.energy_range();
    if (er.lo != er.hi) throw DomainError("L1 has no fixed energy");
    target_ = static_cast<int>(-er.lo);
  }

  LemmaBasicReport run() {
    LemmaBasicReport rep;
    Series lhs(out_ring_), rhs_g(out_ring_);
    std::vector<int> p(a_.size(), -1);
    const auto parts = set_partitions(n_);
    do {
      ++rep.coefficients;
      Rational l = lhs_at(p), g = 0;
      for (const auto& P : parts) {
        std::vector<W> ops{L1_};
        for (const auto& block : P) ops.push_back(block_op(block, sub(p, block)));
        ops.push_back(L2_);
        g += vev(ops, scalar_ring()).constant_term();
      }
      lhs.add_term(p, l);
      rhs_g.add_term(p, g);
    } while (next(p, order_));
    rep.direct_agrees = lhs == rhs_g;
    if (!rep.direct_agrees) rep.failures.push_back("direct: " + lhs.to_string() + " vs " + rhs_g.to_string());

    rep.proportional = true;
    Series rhs_f(ring_);
    for (const auto& P : parts) {
      std::vector<W> ops{L1_};
      for (const auto& block : P) {
        auto [op, prop] = f_operator(block, rep);
        rep.proportional = rep.proportional && prop;
        ops.push_back(op);
      }
      ops.push_back(L2_);
      rhs_f += vev(ops, ring_);
    }
    rhs_f = clip(rhs_f);
    rep.f_form_agrees = rhs_f == lhs;
    if (!rep.f_form_agrees) rep.failures.push_back("f form: " + lhs.to_string() + " vs " + rhs_f.to_string());
    if (!rep.proportional) rep.failures.push_back("sum_m G is not f E on a second matrix element");
    return rep;
  }

 private:
  static constexpr int kSlack = 2;

  static std::vector<int> sub(const std::vector<int>& p, const std::vector<int>& block) {
    std::vector<int> s;
    for (int i : block) s.push_back(p[static_cast<std::size_t>(i)]);
    return s;
  }

  static bool next(std::vector<int>& p, int hi) {
    for (std::size_t i = p.size(); i-- > 0;) {
      if (p[i] < hi) {
        ++p[i];
        return true;
      }
      p[i] = -1;
    }
    return false;
  }

  Series clip(const Series& s) const {
    Series out(out_ring_);
    for (const auto& [e, c] : s.terms())
      if (std::all_of(e.begin(), e.end(), [&](int x) { return x <= order_; })) out.add_term(e, c);
    return out;
  }

  int numer(int i) const { return a_[static_cast<std::size_t>(i)] >= 0 ? a_[static_cast<std::size_t>(i)] : r_ + a_[static_cast<std::size_t>(i)]; }
  // a > 0: c_m starts at z^{m+1}; a = 0: c_m starts at z^m and E_0 adds a z^{-1} pole at m = 0
  int m_max(int i, int p) const {
    const int a = a_[static_cast<std::size_t>(i)];
    return a > 0 ? p - 1 : a == 0 ? std::max(p, 0) : p;
  }
  // energy lowered by R_{m, a_i}
  int lowering(int i, int m) const { return m * r_ + a_[static_cast<std::size_t>(i)]; }

  // z_i^p coefficient of R_{m, a_i}
  const W& coeff_op(int i, int p, int m) {
    auto key = std::make_tuple(i, p, m);
    auto it = coeff_cache_.find(key);
    if (it != coeff_cache_.end()) return it->second;
    const int idx = a_[static_cast<std::size_t>(i)] >= 0 ? m : m - 1;
    return coeff_cache_.emplace(key, a_term(scalar_ring(), numer(i), r_, p - 1, idx, EquivariantMode::TZero))
        .first->second;
  }

  Rational lhs_at(const std::vector<int>& p) {
    Rational acc = 0;
    std::function<void(int, const FockVector&, int)> rec = [&](int j, const FockVector& v, int e) {
      if (v.is_zero()) return;
      if (j < 0) {
        if (e != target_) return;
        acc += inner(FockVector::vacuum(scalar_ring()), apply(L1_, v)).constant_term();
        return;
      }
      int cap_left = 0;
      for (int l = 0; l < j; ++l)
        cap_left += std::max(0, lowering(l, m_max(l, p[static_cast<std::size_t>(l)])));
      for (int m = m_max(j, p[static_cast<std::size_t>(j)]);; --m) {
        const int e2 = e - lowering(j, m);
        if (e2 > target_ + cap_left) break;
        if (e2 < 0) continue;
        const W& op = coeff_op(j, p[static_cast<std::size_t>(j)], m);
        ApplyContext ctx;
        rec(j - 1, apply_window(op, v, e2, e2, ctx), e2);
      }
    };
    rec(n_ - 1, v2_, v2_.min_energy());
    return acc;
  }

  // sum over m-vectors of total 0 of G(R_{m_i, a_i} coefficients)
  const W& block_op(const std::vector<int>& block, const std::vector<int>& p) {
    auto key = std::make_pair(block, p);
    auto it = block_cache_.find(key);
    if (it != block_cache_.end()) return it->second;
    const std::size_t s = block.size();
    std::vector<int> mx(s);
    int sum_max = 0;
    for (std::size_t q = 0; q < s; ++q) sum_max += (mx[q] = m_max(block[q], p[q]));
    std::vector<W> terms;
    std::vector<int> m(s);
    std::function<void(std::size_t, int)> rec = [&](std::size_t q, int partial) {
      if (q + 1 == s) {
        m[q] = -partial;
        if (m[q] > mx[q]) return;
        std::vector<GradedOp> ops;
        for (std::size_t t = 0; t < s; ++t) {
          const W& op = coeff_op(block[t], p[t], m[t]);
          ops.push_back({op, -m[t], -a_[static_cast<std::size_t>(block[t])]});
        }
        terms.push_back(G_n_connected(ops));
        return;
      }
      int rest = 0;
      for (std::size_t t = q + 1; t < s; ++t) rest += mx[t];
      for (int v = -rest - partial; v <= mx[q]; ++v) {
        m[q] = v;
        rec(q + 1, partial + v);
      }
    };
    (void)sum_max;
    rec(0, 0);
    return block_cache_.emplace(key, W::sum(std::move(terms))).first->second;
  }

  // matrix elements with a nonzero constant term for E_c: c = 0 uses the vacuum (and a second
  // pair through alpha_{+-1}), c != 0 pairs with alpha_{-c}
  Series element(const W& x, int c, bool second, const RingPtr& ring) const {
    std::vector<W> ops;
    if (c < 0) ops.push_back(W::alpha(-c));
    if (second) ops.push_back(W::alpha(1));
    ops.push_back(x);
    if (second) ops.push_back(W::alpha(-1));
    if (c > 0) ops.push_back(W::alpha(-c));
    return vev(ops, ring);
  }

  std::pair<W, bool> f_operator(const std::vector<int>& block, LemmaBasicReport& rep) {
    int c = 0;
    LinearForm sum = LinearForm::zero(ring_);
    for (int i : block) {
      c += a_[static_cast<std::size_t>(i)];
      sum = sum + LinearForm::var(ring_, "z" + std::to_string(i + 1));
    }
    Series g1(ring_), g2(ring_);
    std::vector<int> q(block.size(), -1);
    do {
      const W& op = block_op(block, q);
      Exponents e(a_.size(), 0);
      for (std::size_t t = 0; t < block.size(); ++t) e[static_cast<std::size_t>(block[t])] = q[t];
      g1.add_term(e, element(op, c, false, scalar_ring()).constant_term());
      g2.add_term(e, element(op, c, true, scalar_ring()).constant_term());
    } while (next(q, order_ + kSlack));
    W op;
    Series f(ring_);
    bool prop;
    if (c == 0) {
      // f E_0 = f E_0^{op} + f / varsigma, and only the second term survives on the vacuum
      f = g1 * varsigma(ring_, sum);
      W e_op = W::e_series(0, sum, false);
      prop = clip(g2) == clip(f * element(e_op, 0, true, ring_) + g1);
      op = W::sum({W::scaled(f, e_op), W::scaled(g1, W::identity())});
    } else {
      W e_op = W::e_series(c, sum);
      f = g1 * element(e_op, c, false, ring_).inverse();
      prop = clip(g2) == clip(f * element(e_op, c, true, ring_));
      op = W::scaled(f, e_op);
    }
    rep.f.emplace(block, clip(f));
    return {op, prop};
  }

  std::vector<int> a_;
  int n_, r_;
  W L1_, L2_;
  int order_;
  RingPtr ring_, out_ring_;
  FockVector v2_{scalar_ring()};
  int target_ = 0;
  std::map<std::tuple<int, int, int>, W> coeff_cache_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, W> block_cache_;
};

}  // namespace

LemmaBasicReport verify_lemma_basic(const std::vector<int>& a, int r, const WedgeOperator& L1,
                                    const WedgeOperator& L2, int order) {
  int s = 0;
  for (int x : a) s += std::abs(x);
  if (a.empty() || r <= s) throw DomainError("need r > sum |a_i| and at least one factor");
  if (order < -1) throw ConfigError("order below -1");
  return LemmaBasic(a, r, L1, L2, order).run();
}

}  // namespace gwwedge
