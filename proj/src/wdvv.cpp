#include "gwwedge/wdvv.hpp"

#include <algorithm>
#include <optional>

#include "gwwedge/errors.hpp"

namespace gwwedge {

using Label = BasisClass::Label;

BasisClass BasisClass::dual() const {
  switch (label) {
    case Label::One:
      return hyperplane();
    case Label::H:
      return one();
    case Label::Zero:
      return zero(-sector);
    case Label::Inf:
      return inf(-sector);
  }
  return *this;
}

std::string BasisClass::to_string() const {
  switch (label) {
    case Label::One:
      return "[1]_0";
    case Label::H:
      return "[H]_0";
    case Label::Zero:
      return "[0]_" + std::to_string(sector);
    case Label::Inf:
      return "[inf]_" + std::to_string(sector);
  }
  return "?";
}

Rational pairing(const BasisClass& x, const BasisClass& y) {
  if (x.sector + y.sector != 0) return 0;
  if (x.sector == 0) {
    const bool one_h = (x.label == Label::One && y.label == Label::H) || (x.label == Label::H && y.label == Label::One);
    return one_h ? 1 : 0;
  }
  return x.label == y.label ? 1 : 0;
}

Rational family_closed_form(int a, const std::vector<int>& b, int d) {
  int s = a;
  for (int x : b) s += x;
  if (s != d) return 0;
  if (b.empty()) return Rational(1) / d;
  return power(Rational(d), static_cast<int>(b.size()) - 1);
}

namespace {

struct Shape {
  std::vector<int> mu0, mu_inf;
  int ones = 0, hs = 0, negatives = 0;
};

Shape shape_of(const std::vector<BasisClass>& ins) {
  Shape s;
  for (const auto& c : ins) {
    if ((c.label == Label::Zero || c.label == Label::Inf) && c.sector == 0)
      throw DomainError("relative class with contact order 0");
    if ((c.label == Label::One || c.label == Label::H) && c.sector != 0)
      throw DomainError("interior class in a nonzero sector");
    switch (c.label) {
      case Label::One:
        ++s.ones;
        break;
      case Label::H:
        ++s.hs;
        break;
      case Label::Zero:
        s.mu0.push_back(c.sector);
        break;
      case Label::Inf:
        s.mu_inf.push_back(c.sector);
        break;
    }
    if (c.sector < 0) ++s.negatives;
  }
  return s;
}

int sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

// partition rule and dimension rule
bool vanishes(const std::vector<BasisClass>& ins, int d) {
  if (d < 0) return true;
  Shape s = shape_of(ins);
  if (sum(s.mu0) != d || sum(s.mu_inf) != d) return true;
  const int vdim = s.ones + s.hs + static_cast<int>(s.mu0.size() + s.mu_inf.size()) - 2 - s.negatives;
  return vdim != s.hs;
}

std::vector<BasisClass> without_first(const std::vector<BasisClass>& ins, Label l) {
  std::vector<BasisClass> out = ins;
  out.erase(std::find_if(out.begin(), out.end(), [&](const BasisClass& c) { return c.label == l; }));
  return out;
}

struct Accumulated {
  Rational lhs, rhs;        // known parts
  Rational lhs_coef, rhs_coef;  // coefficients of the skipped value
};

Accumulated accumulate(InvariantEvaluator& ev, std::vector<BasisClass> ins, int d,
                       const std::optional<std::pair<std::vector<BasisClass>, int>>& unknown) {
  if (ins.size() < 4) throw DomainError("WDVV needs at least four insertions");
  std::vector<BasisClass> rest(ins.begin() + 4, ins.end());
  int bound = d + 1;
  for (const auto& c : ins) bound += std::abs(c.sector);
  std::vector<BasisClass> basis{BasisClass::one(), BasisClass::hyperplane()};
  for (int i = -bound; i <= bound; ++i)
    if (i != 0) {
      basis.push_back(BasisClass::zero(i));
      basis.push_back(BasisClass::inf(i));
    }
  auto sorted = [](std::vector<BasisClass> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  Accumulated acc;
  auto side = [&](const BasisClass& p, const BasisClass& q, const BasisClass& u, const BasisClass& v, Rational& known,
                  Rational& coef) {
    for (int d1 = 0; d1 <= d; ++d1)
      for (const auto& T : basis)
        for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
          std::vector<BasisClass> f1{p, q}, f2{T.dual(), u, v};
          for (std::size_t j = 0; j < rest.size(); ++j) (mask & (1u << j) ? f1 : f2).push_back(rest[j]);
          f1.push_back(T);
          if (vanishes(f1, d1) || vanishes(f2, d - d1)) continue;
          if (unknown && unknown->second == d1 && sorted(f1) == unknown->first) {
            coef += ev.I(f2, d - d1);
            continue;
          }
          if (unknown && unknown->second == d - d1 && sorted(f2) == unknown->first) {
            coef += ev.I(f1, d1);
            continue;
          }
          Rational x = ev.I(f2, d - d1);
          if (x != 0) known += x * ev.I(f1, d1);
        }
  };
  side(ins[0], ins[1], ins[2], ins[3], acc.lhs, acc.lhs_coef);
  side(ins[0], ins[2], ins[1], ins[3], acc.rhs, acc.rhs_coef);
  return acc;
}

}  // namespace

void InvariantEvaluator::override_value(std::vector<BasisClass> insertions, int d, const Rational& value) {
  std::sort(insertions.begin(), insertions.end());
  overrides_[{insertions, d}] = value;
  memo_.clear();
}

Rational InvariantEvaluator::I(std::vector<BasisClass> insertions, int d) {
  std::sort(insertions.begin(), insertions.end());
  Key key{insertions, d};
  if (auto it = overrides_.find(key); it != overrides_.end()) return it->second;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Rational v = evaluate(insertions, d);
  memo_.emplace(key, v);
  return v;
}

Rational InvariantEvaluator::evaluate(const std::vector<BasisClass>& ins, int d) {
  if (vanishes(ins, d)) return 0;
  Shape s = shape_of(ins);
  const int n = static_cast<int>(ins.size());
  if (s.ones > 0) {
    // fundamental class on a stable space
    if (d > 0 || n > 3) return 0;
    throw UnsupportedConfiguration("unstable insertion of [1]_0");
  }
  if (s.hs > 0) {
    // divisor rule
    if (d > 0) return Rational(d) * I(without_first(ins, Label::H), d);
    if (n > 3) return 0;
    throw UnsupportedConfiguration("degree-zero three-point invariant with [H]_0");
  }
  if (d == 0) {
    // one negative contact among three markings on one divisor
    if (n == 3 && (s.mu0.empty() || s.mu_inf.empty()) && s.negatives == 1) return 1;
    throw UnsupportedConfiguration("degree-zero relative invariant outside the evaluated family");
  }
  auto positives = [](const std::vector<int>& v) {
    return std::count_if(v.begin(), v.end(), [](int x) { return x > 0; });
  };
  const std::vector<int>* side = nullptr;
  if (s.mu_inf.size() == 1 && positives(s.mu0) == 1) side = &s.mu0;
  if (!side && s.mu0.size() == 1 && positives(s.mu_inf) == 1) side = &s.mu_inf;  // exchange 0 and inf
  if (!side) throw UnsupportedConfiguration("relative invariant outside the family [0]_a, [0]_b.., [inf]_d");
  int a = 0;
  std::vector<int> b;
  for (int x : *side) {
    if (x > 0) {
      a = x;
    } else {
      b.push_back(x);
    }
  }
  std::sort(b.begin(), b.end());
  return family(a, b, d);
}

Rational InvariantEvaluator::family(int a, std::vector<int> b, int d) {
  if (b.empty()) return Rational(1) / d;
  if (mode_ == Mode::ClosedForm) return family_closed_form(a, b, d);
  ++wdvv_instances_;
  solved_.push_back({a, b, d});
  const int last = b.back();
  b.pop_back();
  std::vector<BasisClass> ins{BasisClass::zero(a), BasisClass::inf(d), BasisClass::hyperplane(),
                              BasisClass::inf(-last)};
  for (int x : b) ins.push_back(BasisClass::zero(x));
  std::vector<BasisClass> target{BasisClass::zero(a), BasisClass::inf(d), BasisClass::zero(last)};
  for (int x : b) target.push_back(BasisClass::zero(x));
  std::sort(target.begin(), target.end());
  Accumulated acc = accumulate(*this, ins, d - last, std::make_pair(target, d));
  const Rational coef = acc.lhs_coef - acc.rhs_coef;
  if (coef == 0) throw IntegrityError("the WDVV instance does not determine the invariant");
  return (acc.rhs - acc.lhs) / coef;
}

WdvvSides wdvv_sides(InvariantEvaluator& ev, const std::vector<BasisClass>& insertions, int d) {
  Accumulated acc = accumulate(ev, insertions, d, std::nullopt);
  return {acc.lhs, acc.rhs};
}

Rational wdvv_residual(InvariantEvaluator& ev, int a, const std::vector<int>& b, int d) {
  if (a <= 0 || b.empty() || std::any_of(b.begin(), b.end(), [](int x) { return x >= 0; }))
    throw DomainError("need a > 0 and negative b entries");
  if (a + sum(b) != d) throw DomainError("contact orders at 0 do not sum to d");
  const int last = b.back();
  std::vector<BasisClass> ins{BasisClass::zero(a), BasisClass::inf(d), BasisClass::hyperplane(),
                              BasisClass::inf(-last)};
  for (std::size_t i = 0; i + 1 < b.size(); ++i) ins.push_back(BasisClass::zero(b[i]));
  WdvvSides s = wdvv_sides(ev, ins, d - last);
  return s.lhs - s.rhs;
}

Rational wdvv_residual(int a, const std::vector<int>& b, int d) {
  InvariantEvaluator ev(InvariantEvaluator::Mode::ClosedForm);
  return wdvv_residual(ev, a, b, d);
}

}  // namespace gwwedge
