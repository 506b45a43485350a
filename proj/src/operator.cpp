#include "gwwedge/operator.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gwwedge/errors.hpp"
#include "gwwedge/special.hpp"

namespace gwwedge {

// -------------------------------------------------------------------- Scalar

Series Scalar::times(const Series& v) const {
  Series r = s ? v * *s : v;
  if (q != 1) r *= q;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  r.q = q * o.q;
  if (s && o.s)
    r.s = *s * *o.s;
  else if (s)
    r.s = s;
  else if (o.s)
    r.s = o.s;
  return r;
}

bool Scalar::is_zero() const { return q == 0 || (s && s->is_zero()); }

std::string Scalar::to_string() const {
  if (!s) return gwwedge::to_string(q);
  if (q == 1) return "[" + s->to_string() + "]";
  return gwwedge::to_string(q) + "*[" + s->to_string() + "]";
}

// ------------------------------------------------------------- construction

using Kind = WedgeOperator::Kind;

WedgeOperator::WedgeOperator() : node_(std::make_shared<const Node>()) {}

WedgeOperator WedgeOperator::make(Node n) { return WedgeOperator(std::make_shared<const Node>(std::move(n))); }

WedgeOperator WedgeOperator::identity() { return WedgeOperator(); }

WedgeOperator WedgeOperator::zero() { return sum({}); }

WedgeOperator WedgeOperator::alpha(int j) {
  if (j == 0) throw ConfigError("alpha_0 is not defined");
  Node n;
  n.kind = Kind::Alpha;
  n.j = j;
  return make(std::move(n));
}

WedgeOperator WedgeOperator::e_series(int j, LinearForm arg, bool with_delta) {
  Node n;
  n.kind = Kind::ESeries;
  n.j = j;
  n.arg = std::move(arg);
  n.with_delta = with_delta;
  return make(std::move(n));
}

WedgeOperator WedgeOperator::e_coeff(int j, int k) {
  if (k < -2) throw ConfigError("E coefficient index below -2");
  Node n;
  n.kind = Kind::ECoeff;
  n.j = j;
  n.k = k;
  return make(std::move(n));
}

WedgeOperator WedgeOperator::e_modes(int j, std::vector<Scalar> modes) {
  Node n;
  n.kind = Kind::EModes;
  n.j = j;
  n.modes = std::move(modes);
  return make(std::move(n));
}

WedgeOperator WedgeOperator::energy() {
  Node n;
  n.kind = Kind::Energy;
  return make(std::move(n));
}

WedgeOperator WedgeOperator::project(int level) {
  Node n;
  n.kind = Kind::Project;
  n.j = level;
  return make(std::move(n));
}

WedgeOperator WedgeOperator::exp_alpha(Scalar c, int m) {
  if (m == 0) throw ConfigError("exp of alpha_0 is not defined");
  Node n;
  n.kind = Kind::ExpAlpha;
  n.factor = std::move(c);
  n.j = m;
  return make(std::move(n));
}

WedgeOperator WedgeOperator::scaled(Scalar f, WedgeOperator op) {
  Node n;
  n.kind = Kind::Scaled;
  n.factor = std::move(f);
  n.children.push_back(std::move(op));
  return make(std::move(n));
}

WedgeOperator WedgeOperator::product(std::vector<WedgeOperator> factors) {
  if (factors.size() == 1) return factors.front();
  Node n;
  n.kind = Kind::Product;
  n.children = std::move(factors);
  return make(std::move(n));
}

WedgeOperator WedgeOperator::sum(std::vector<WedgeOperator> terms) {
  if (terms.size() == 1) return terms.front();
  Node n;
  n.kind = Kind::Sum;
  n.children = std::move(terms);
  return make(std::move(n));
}

WedgeOperator WedgeOperator::commutator(const WedgeOperator& a, const WedgeOperator& b) {
  return sum({product({a, b}), scaled(Rational(-1), product({b, a}))});
}

// -------------------------------------------------------------- energy range

namespace {

long sat_add(long a, long b) {
  constexpr long inf = EnergyRange::kInfinite;
  if (a >= inf || b >= inf) {
    if (a <= -inf || b <= -inf) return 0;
    return inf;
  }
  if (a <= -inf || b <= -inf) return -inf;
  return std::clamp(a + b, -inf, inf);
}

}  // namespace

EnergyRange WedgeOperator::energy_range() const {
  constexpr long inf = EnergyRange::kInfinite;
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Identity:
    case Kind::Energy:
    case Kind::Project:
      return {0, 0};
    case Kind::Alpha:
    case Kind::ESeries:
    case Kind::ECoeff:
    case Kind::EModes:
      return {-n.j, -n.j};
    case Kind::ExpAlpha:
      return n.j < 0 ? EnergyRange{0, inf} : EnergyRange{-inf, 0};
    case Kind::Scaled:
      return n.children[0].energy_range();
    case Kind::Product: {
      EnergyRange r{0, 0};
      for (const auto& c : n.children) {
        EnergyRange e = c.energy_range();
        r.lo = sat_add(r.lo, e.lo);
        r.hi = sat_add(r.hi, e.hi);
      }
      return r;
    }
    case Kind::Sum: {
      if (n.children.empty()) return {0, 0};
      EnergyRange r{inf, -inf};
      for (const auto& c : n.children) {
        EnergyRange e = c.energy_range();
        r.lo = std::min(r.lo, e.lo);
        r.hi = std::max(r.hi, e.hi);
      }
      return r;
    }
  }
  return {0, 0};
}

std::string WedgeOperator::to_string() const {
  const Node& n = *node_;
  std::ostringstream os;
  switch (n.kind) {
    case Kind::Identity:
      return "(id)";
    case Kind::Alpha:
      os << "(alpha " << n.j << ")";
      break;
    case Kind::ESeries: {
      os << "(E " << n.j << " [";
      bool first = true;
      for (std::size_t i = 0; i < n.arg.coeffs.size(); ++i) {
        if (n.arg.coeffs[i] == 0) continue;
        os << (first ? "" : " ") << gwwedge::to_string(n.arg.coeffs[i]) << "*x" << i;
        first = false;
      }
      os << "]" << (n.with_delta ? "" : " nodelta") << ")";
      break;
    }
    case Kind::ECoeff:
      os << "(Ec " << n.j << " " << n.k << ")";
      break;
    case Kind::EModes:
      os << "(Emodes " << n.j;
      for (const auto& m : n.modes) os << " " << m.to_string();
      os << ")";
      break;
    case Kind::Energy:
      return "(H)";
    case Kind::Project:
      os << "(P " << n.j << ")";
      break;
    case Kind::ExpAlpha:
      os << "(exp " << n.factor.to_string() << " " << n.j << ")";
      break;
    case Kind::Scaled:
      os << "(scale " << n.factor.to_string() << " " << n.children[0].to_string() << ")";
      break;
    case Kind::Product:
    case Kind::Sum:
      os << (n.kind == Kind::Product ? "(*" : "(+");
      for (const auto& c : n.children) os << " " << c.to_string();
      os << ")";
      break;
  }
  return os.str();
}

// ------------------------------------------------------------------- adjoint

namespace {

Scalar negate_in(const Scalar& s, int var) {
  if (var < 0 || !s.s) return s;
  Scalar r = s;
  r.s = s.s->negate_variable(static_cast<std::size_t>(var));
  return r;
}

WedgeOperator adjoint_impl(const WedgeOperator& op, const std::optional<std::string>& negate_var) {
  using W = WedgeOperator;
  const auto& n = op.node();
  auto var_of = [&](const Scalar& s) -> int {
    if (!negate_var || !s.s) return -1;
    const auto& ring = s.s->ring();
    return ring->has(*negate_var) ? ring->index_of(*negate_var) : -1;
  };
  switch (n.kind) {
    case Kind::Identity:
    case Kind::Energy:
    case Kind::Project:
      return op;
    case Kind::Alpha:
      return W::alpha(-n.j);
    case Kind::ESeries:
      return W::e_series(-n.j, n.arg, n.with_delta);
    case Kind::ECoeff:
      return W::e_coeff(-n.j, n.k);
    case Kind::EModes: {
      std::vector<Scalar> modes;
      for (const auto& m : n.modes) modes.push_back(negate_in(m, var_of(m)));
      return W::e_modes(-n.j, std::move(modes));
    }
    case Kind::ExpAlpha:
      return W::exp_alpha(negate_in(n.factor, var_of(n.factor)), -n.j);
    case Kind::Scaled:
      return W::scaled(negate_in(n.factor, var_of(n.factor)), adjoint_impl(n.children[0], negate_var));
    case Kind::Product: {
      std::vector<W> f;
      for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
        f.push_back(adjoint_impl(*it, negate_var));
      return W::product(std::move(f));
    }
    case Kind::Sum: {
      std::vector<W> t;
      for (const auto& c : n.children) t.push_back(adjoint_impl(c, negate_var));
      return W::sum(std::move(t));
    }
  }
  return op;
}

}  // namespace

WedgeOperator adjoint(const WedgeOperator& op, std::optional<std::string> negate_var) {
  return adjoint_impl(op, negate_var);
}

// --------------------------------------------------------------------- apply

namespace {

bool keep(int e, long lo, long hi, ApplyContext& ctx) {
  if (e < lo || e > hi || e < 0) return false;
  if (ctx.cap && e > *ctx.cap) {
    // truncation inside an unbounded window is what the cap is for
    if (hi < EnergyRange::kInfinite) ctx.cap_hit = true;
    return false;
  }
  return true;
}

// Coefficient of E_{k-j,k} in sum_m modes[m] [z^(m-1)] E_j(z), c = k - j/2.
Scalar modes_value(const std::vector<Scalar>& modes, const Rational& c) {
  bool have_series = false;
  Rational rational_part = 0;
  std::optional<Series> series_part;
  Rational cp = 1;  // c^(m-1)/(m-1)!
  for (std::size_t m = 1; m < modes.size(); ++m) {
    if (m > 1) cp *= c / Rational(static_cast<long>(m - 1));
    const Scalar& s = modes[m];
    if (!s.s) {
      rational_part += s.q * cp;
    } else {
      Series term = *s.s * (s.q * cp);
      if (series_part)
        *series_part += term;
      else
        series_part = term;
      have_series = true;
    }
  }
  if (!have_series) return Scalar(rational_part);
  if (rational_part != 0) *series_part += Series::constant(series_part->ring(), rational_part);
  return Scalar(*series_part);
}

Scalar modes_delta(const std::vector<Scalar>& modes) {
  Rational rational_part = 0;
  std::optional<Series> series_part;
  for (std::size_t m = 0; m < modes.size(); ++m) {
    Rational d = inv_varsigma_coeff(static_cast<int>(m) - 1);
    if (d == 0) continue;
    const Scalar& s = modes[m];
    if (!s.s) {
      rational_part += s.q * d;
    } else {
      Series term = *s.s * (s.q * d);
      if (series_part)
        *series_part += term;
      else
        series_part = term;
    }
  }
  if (!series_part) return Scalar(rational_part);
  if (rational_part != 0) *series_part += Series::constant(series_part->ring(), rational_part);
  return Scalar(*series_part);
}

FockVector apply_elementary(const WedgeOperator::Node& n, const FockVector& v, long lo, long hi,
                            ApplyContext& ctx) {
  const RingPtr& ring = v.ring();
  FockVector out(ring);
  const int j = n.kind == Kind::Alpha || n.kind == Kind::ESeries || n.kind == Kind::ECoeff ||
                        n.kind == Kind::EModes
                    ? n.j
                    : 0;
  std::map<int, Scalar> cache;  // keyed by twice the move coefficient
  std::optional<Scalar> delta;
  if (j == 0) {
    if (n.kind == Kind::ESeries && n.with_delta) delta = Scalar(inv_varsigma(ring, n.arg));
    if (n.kind == Kind::ECoeff) delta = Scalar(inv_varsigma_coeff(n.k + 1));
    if (n.kind == Kind::EModes) delta = modes_delta(n.modes);
  }
  auto coefficient = [&](int twice_c) -> const Scalar& {
    auto it = cache.find(twice_c);
    if (it != cache.end()) return it->second;
    Rational c(twice_c, 2);
    c.canonicalize();
    Scalar s;
    switch (n.kind) {
      case Kind::Alpha:
        s = Scalar(Rational(1));
        break;
      case Kind::ESeries:
        s = Scalar(exp_linear(ring, c, n.arg));
        break;
      case Kind::ECoeff:
        s = n.k == -2 ? Scalar(Rational(0)) : Scalar(power(c, n.k + 1) / factorial(n.k + 1));
        break;
      case Kind::EModes:
        s = modes_value(n.modes, c);
        break;
      default:
        break;
    }
    return cache.emplace(twice_c, std::move(s)).first->second;
  };
  for (const auto& [lambda, coeff] : v.entries()) {
    const int e_out = lambda.size() - j;
    if (!keep(e_out, lo, hi, ctx)) continue;
    for_each_move(lambda, j, [&](const Partition& target, int sign, int twice_k) {
      const Scalar& c = coefficient(twice_k - j);
      if (c.is_zero()) return;
      Series term = c.times(coeff);
      if (sign < 0) term *= Rational(-1);
      out.add(target, term);
    });
    if (delta && !delta->is_zero()) out.add(lambda, delta->times(coeff));
  }
  return out;
}

}  // namespace

FockVector apply_window(const WedgeOperator& op, const FockVector& v, long lo, long hi,
                        ApplyContext& ctx) {
  constexpr long inf = EnergyRange::kInfinite;
  lo = std::max(lo, 0L);
  const auto& n = op.node();
  const RingPtr& ring = v.ring();
  switch (n.kind) {
    case Kind::Identity: {
      FockVector out(ring);
      for (const auto& [l, c] : v.entries())
        if (keep(l.size(), lo, hi, ctx)) out.add(l, c);
      return out;
    }
    case Kind::Alpha:
    case Kind::ESeries:
    case Kind::ECoeff:
    case Kind::EModes:
      return apply_elementary(n, v, lo, hi, ctx);
    case Kind::Energy: {
      FockVector out(ring);
      for (const auto& [l, c] : v.entries())
        if (l.size() != 0 && keep(l.size(), lo, hi, ctx)) out.add(l, c * Rational(l.size()));
      return out;
    }
    case Kind::Project: {
      FockVector out(ring);
      for (const auto& [l, c] : v.entries())
        if (l.size() == n.j && keep(l.size(), lo, hi, ctx)) out.add(l, c);
      return out;
    }
    case Kind::ExpAlpha: {
      FockVector out(ring);
      FockVector term = v;
      const WedgeOperator a = WedgeOperator::alpha(n.j);
      if (n.j < 0 && hi >= inf && !ctx.cap)
        throw ConfigError("unbounded exponential of a raising operator");
      for (int k = 0;; ++k) {
        for (const auto& [l, c] : term.entries())
          if (keep(l.size(), lo, hi, ctx)) out.add(l, c);
        // raising terms only grow in energy, lowering terms only shrink
        FockVector next = n.j < 0 ? apply_window(a, term, 0, hi, ctx) : apply_window(a, term, lo, inf, ctx);
        FockVector scaled(ring);
        for (const auto& [l, c] : next.entries()) scaled.add(l, n.factor.times(c) * Rational(1, k + 1));
        term = std::move(scaled);
        if (term.is_zero()) break;
      }
      return out;
    }
    case Kind::Scaled: {
      FockVector inner = apply_window(n.children[0], v, lo, hi, ctx);
      FockVector out(ring);
      for (const auto& [l, c] : inner.entries()) out.add(l, n.factor.times(c));
      return out;
    }
    case Kind::Product: {
      const auto& f = n.children;
      const std::size_t m = f.size();
      // prefix ranges of the factors to the left of factor i
      std::vector<EnergyRange> left(m + 1, EnergyRange{0, 0});
      for (std::size_t i = 0; i < m; ++i) {
        EnergyRange e = f[i].energy_range();
        left[i + 1].lo = sat_add(left[i].lo, e.lo);
        left[i + 1].hi = sat_add(left[i].hi, e.hi);
      }
      FockVector cur = v;
      for (std::size_t i = m; i-- > 0;) {
        long wlo = sat_add(lo, -left[i].hi);
        long whi = sat_add(hi, -left[i].lo);
        cur = apply_window(f[i], cur, wlo, whi, ctx);
        if (cur.is_zero()) break;
      }
      if (m == 0) return apply_window(WedgeOperator::identity(), v, lo, hi, ctx);
      return cur;
    }
    case Kind::Sum: {
      FockVector out(ring);
      for (const auto& c : n.children) out += apply_window(c, v, lo, hi, ctx);
      return out;
    }
  }
  return FockVector(ring);
}

FockVector apply(const WedgeOperator& op, const FockVector& v, std::optional<int> cap) {
  ApplyContext ctx;
  ctx.cap = cap;
  long hi = cap ? static_cast<long>(*cap) : EnergyRange::kInfinite;
  ctx.cap = std::nullopt;
  FockVector out = apply_window(op, v, 0, hi, ctx);
  return out;
}

}  // namespace gwwedge
