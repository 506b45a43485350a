#include "gwwedge/johnson.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <tuple>

#include "gwwedge/errors.hpp"
#include "gwwedge/special.hpp"

namespace gwwedge {

using W = WedgeOperator;

namespace {

Rational frac(int p, int q) {
  Rational x(p, q);
  x.canonicalize();
  return x;
}

RingPtr z_ring(int k, int i, EquivariantMode mode, int t_degree) {
  const int lo = std::min(i, 0) - 1;
  const int hi = k + 4 + std::abs(i);
  if (mode == EquivariantMode::TZero) return make_ring({"z"}, {hi}, {lo});
  return make_ring({"z", "t"}, {hi, t_degree}, {lo, 0});
}

}  // namespace

Series a_coefficient(const RingPtr& ring, int a, int r, int i, EquivariantMode mode) {
  const std::size_t zi = static_cast<std::size_t>(ring->index_of("z"));
  LinearForm rz = LinearForm::var(ring, "z", Rational(r));
  Series z = Series::variable(ring, "z");
  if (mode == EquivariantMode::TZero) {
    if (a == 0) {
      if (i < 0) return Series(ring);
      // (z S(rz))^i / i!
      Series s = S_power(ring, rz, Series::constant(ring, Rational(i)));
      return s.shifted(zi, i) * (1 / factorial(i));
    }
    // (z/a) S(rz)^{a/r} (z S(rz))^i / (1 + a/r)_i
    Series s = S_power(ring, rz, Series::constant(ring, frac(a, r) + i));
    return s.shifted(zi, i + 1) * (1 / (Rational(a) * pochhammer(frac(a, r), i)));
  }
  Series tz = Series::variable(ring, "t") * z;
  Series x = (tz + Series::constant(ring, Rational(a))) * frac(1, r);  // (tz + a)/r
  Series s = S_power(ring, rz, x + Series::constant(ring, Rational(i))).shifted(zi, i);
  Series c = s * pochhammer_reciprocal(x, i);
  if (a > 0) c = c * z * (tz + Series::constant(ring, Rational(a))).inverse();
  return c;
}

WedgeOperator a_term(const RingPtr& target, int a, int r, int k, int i, EquivariantMode mode) {
  const int tdeg = target->has("t") ? target->max_exp(static_cast<std::size_t>(target->index_of("t"))) : 0;
  RingPtr rz = z_ring(k, i, mode, tdeg);
  Series c = a_coefficient(rz, a, r, i, mode);
  if (c.is_zero()) return W::zero();
  const int minpow = c.pole_order()[0];
  std::vector<Scalar> modes;
  for (int m = 0; k + 2 - m >= minpow; ++m) {
    Series cm = c.coefficient_of(0, k + 2 - m);
    if (mode == EquivariantMode::TZero) {
      modes.emplace_back(cm.constant_term());
    } else {
      modes.emplace_back(cm.in_ring(target));
    }
  }
  return W::e_modes(i * r + a, std::move(modes));
}

std::vector<Age> ages_of(const std::vector<int>& mu, int r, const std::vector<int>& insertions) {
  std::vector<Age> out;
  for (int x : mu)
    if (x > 0) out.push_back({x, 0});
  for (int x : mu)
    if (x < 0) out.push_back({r + x, 0});
  for (int k : insertions) out.push_back({0, k});
  for (const auto& age : out)
    if (age.numerator < 0 || age.numerator >= r) throw DomainError("age outside [0, 1): r too small");
  return out;
}

namespace {

struct SideResult {
  FockVector vec{scalar_ring()};
  Rational exponent;  // tracked power of t (left) or -t (right)
  bool seen = false;
};

// P_d (alpha_{-r}/r)^{k}/k! op_n' ... op_1' v, op' the given one-term operators, over all
// i-vectors; adjoint_terms selects op' = term^* (left side) or term^* with t -> -t (right side).
class SideBuilder {
 public:
  SideBuilder(const RingPtr& ring, int r, int d, std::vector<Age> ages, EquivariantMode mode, bool include_exp,
              bool right)
      : ring_(ring), r_(r), d_(d), ages_(std::move(ages)), mode_(mode), include_exp_(include_exp), right_(right) {
    // largest energy increase of each factor: i <= i_max
    for (const auto& a : ages_) {
      const int imax = a.numerator == 0 ? a.psi + 1 : a.psi;
      imax_.push_back(imax);
      up_.push_back(std::max(0, imax * r_ + a.numerator));
      // at t = 0 the a = 0 series has no i < 0 terms, so such a factor never lowers energy
      can_lower_.push_back(!(mode_ == EquivariantMode::TZero && a.numerator == 0));
    }
    result_.vec = FockVector(ring_);
  }

  // Layered over steps. Paths reaching the same energy after the same factor are summed first;
  // the tracked t-exponent of a path is its energy / r, so nothing else distinguishes them.
  SideResult run() {
    std::map<int, FockVector> layer;
    layer.emplace(0, FockVector::vacuum(ring_));
    const int target_min = include_exp_ ? d_ % r_ : d_;
    for (std::size_t step = 0; step < ages_.size(); ++step) {
      const std::size_t j = factor(step);
      const Age& a = ages_[j];
      // remaining raising capacity after this factor
      int rest_up = 0;
      bool rest_lowers = false;
      for (std::size_t s = step + 1; s < ages_.size(); ++s) {
        rest_up += up_[factor(s)];
        rest_lowers = rest_lowers || can_lower_[factor(s)];
      }
      std::map<int, FockVector> next;
      for (const auto& [energy, v] : layer) {
        const int imin = -((energy + a.numerator) / r_) - 1;
        for (int i = imin; i <= imax_[j]; ++i) {
          const int e2 = energy + i * r_ + a.numerator;
          if (e2 < 0) continue;
          if (e2 + rest_up < target_min) continue;
          if (!rest_lowers && e2 > d_) break;
          const W& op = term(j, i);
          if (op.kind() == W::Kind::Sum && op.node().children.empty()) continue;
          ApplyContext ctx;
          FockVector w = apply_window(op, v, e2, e2, ctx);
          if (w.is_zero()) continue;
          auto it = next.find(e2);
          if (it == next.end()) {
            next.emplace(e2, std::move(w));
          } else {
            it->second += w;
          }
        }
      }
      layer = std::move(next);
    }
    for (const auto& [energy, v] : layer)
      if (!v.is_zero()) finish(v, energy, frac(energy, r_));
    return std::move(result_);
  }

 private:
  const W& term(std::size_t j, int i) {
    auto key = std::make_tuple(j, i);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const Age& a = ages_[j];
    W op = a_term(ring_, a.numerator, r_, a.psi, i, mode_);
    if (right_) {
      op = mode_ == EquivariantMode::Full ? adjoint(op, std::string("t")) : adjoint(op);
    } else {
      op = adjoint(op);
    }
    return cache_.emplace(key, op).first->second;
  }

  // factors are applied to the vacuum in the order: left side op_1^* first, right side op_m^* first
  std::size_t factor(std::size_t step) const { return right_ ? ages_.size() - 1 - step : step; }

  void finish(const FockVector& v, int energy, const Rational& texp) {
    int gap = d_ - energy;
    if (gap < 0) return;
    if (gap % r_ != 0) return;
    const int kexp = gap / r_;
    if (kexp > 0 && !include_exp_) return;
    FockVector w = v;
    for (int q = 0; q < kexp; ++q) w = apply(W::alpha(-r_), w);
    w *= 1 / (factorial(kexp) * power(Rational(r_), kexp));
    Rational e = texp + kexp - frac(d_, r_);
    if (w.is_zero()) return;
    if (result_.seen && e != result_.exponent)
      throw IntegrityError("fractional t-exponents differ between terms of one bracket");
    result_.exponent = e;
    result_.seen = true;
    result_.vec += w;
  }

  RingPtr ring_;
  int r_, d_;
  std::vector<Age> ages_;
  EquivariantMode mode_;
  bool include_exp_, right_;
  std::vector<int> imax_, up_;
  std::vector<bool> can_lower_;
  std::map<std::tuple<std::size_t, int>, W> cache_;
  SideResult result_;
};

}  // namespace

Series orbifold_bracket(const OrbifoldRequest& req) {
  if (req.r < 1 || req.s < 1 || req.d < 1) throw DomainError("r, s and d must be positive");
  for (const auto& a : req.left)
    if (a.numerator < 0 || a.numerator >= req.r || a.psi < 0) throw DomainError("left age outside [0, 1)");
  for (const auto& a : req.right)
    if (a.numerator < 0 || a.numerator >= req.s || a.psi < 0) throw DomainError("right age outside [0, 1)");
  RingPtr ring = req.mode == EquivariantMode::TZero ? scalar_ring() : make_ring({"t"}, {req.t_degree});
  SideResult L = SideBuilder(ring, req.r, req.d, req.left, req.mode, req.include_exp_r, false).run();
  // the s-side exponential e^{-t alpha_{-s}/s} is always needed to reach energy d
  SideResult R = SideBuilder(ring, req.s, req.d, req.right, req.mode, true, true).run();
  if (!L.seen || !R.seen) return Series(ring);
  Series value = inner(L.vec, R.vec);
  if (req.mode == EquivariantMode::TZero) return value;
  TrackedSeries tracked(value, FracMonomial{L.exponent, R.exponent, 0});
  return tracked.normalized("t");
}

int smallest_admissible_r(const ContactData& cd) {
  // r > sum |mu0| and s = r > sum |mu_inf|; max |mu_i| alone is not enough at small r
  int s0 = 0, sinf = 0;
  for (int x : cd.mu0) s0 += std::abs(x);
  for (int x : cd.mu_inf) sinf += std::abs(x);
  return std::max({cd.degree(), s0, cd.tube ? sinf : 0}) + 1;
}

namespace {

Rational bracket_at(const ContactData& cd, int r) {
  OrbifoldRequest req;
  req.r = r;
  req.s = cd.tube ? r : 1;
  req.d = cd.degree();
  req.left = ages_of(cd.mu0, r, cd.insertions);
  if (cd.tube) req.right = ages_of(cd.mu_inf, r);
  Series v = orbifold_bracket(req);
  int m0 = static_cast<int>(cd.negative0().size());
  int minf = static_cast<int>(cd.negative_inf().size());
  return v.constant_term() * power(Rational(r), m0) * power(Rational(req.s), minf);
}

}  // namespace

LimitResult relative_via_limit(const ContactData& cd, std::vector<int> r_samples, std::optional<int> degree_bound) {
  cd.validate();
  const int rmin = smallest_admissible_r(cd);
  const int rho = static_cast<int>(cd.negative0().size() + cd.negative_inf().size());
  int deg = degree_bound.value_or(rho + 2);
  if (r_samples.empty())
    for (int r = rmin; r <= rmin + deg + 1; ++r) r_samples.push_back(r);
  for (int r : r_samples)
    if (r < rmin) throw DomainError("r sample " + std::to_string(r) + " below the admissible range");
  if (static_cast<int>(r_samples.size()) < deg + 2)
    throw ConfigError("need at least degree bound + 2 samples");
  LimitResult out;
  for (int r : r_samples) {
    out.samples.emplace_back(r);
    out.values.push_back(bracket_at(cd, r));
  }
  // fit through deg + 1 samples, check every further sample
  std::vector<Rational> xs(out.samples.begin(), out.samples.begin() + deg + 1);
  std::vector<Rational> ys(out.values.begin(), out.values.begin() + deg + 1);
  for (std::size_t q = static_cast<std::size_t>(deg) + 1; q < out.samples.size(); ++q)
    if (lagrange_eval(xs, ys, out.samples[q]) != out.values[q])
      throw DegreeBoundTooSmall("bracket is not a polynomial of degree <= " + std::to_string(deg) + " in r");
  out.polynomial = lagrange_coefficients(xs, ys);
  while (!out.polynomial.empty() && out.polynomial.back() == 0) out.polynomial.pop_back();
  out.value = lagrange_constant_term(xs, ys);
  return out;
}

}  // namespace gwwedge
