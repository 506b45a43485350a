#include "gwwedge/series.hpp"

#include <algorithm>
#include <sstream>

#include "gwwedge/errors.hpp"

namespace gwwedge {

Ring::Ring(std::vector<std::string> names, std::vector<int> max_exp, std::vector<int> min_exp)
    : names_(std::move(names)), max_exp_(std::move(max_exp)), min_exp_(std::move(min_exp)) {
  if (min_exp_.empty()) min_exp_.assign(names_.size(), 0);
  if (max_exp_.size() != names_.size() || min_exp_.size() != names_.size())
    throw ConfigError("ring: names and bounds differ in length");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (min_exp_[i] > 0) throw ConfigError("ring: pole bound must be <= 0");
    if (max_exp_[i] < min_exp_[i]) throw ConfigError("ring: truncation below pole bound");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw ConfigError("ring: duplicate variable " + names_[i]);
  }
}

int Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw ConfigError("unknown variable: " + std::string(name));
}

bool Ring::has(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

bool Ring::operator==(const Ring& o) const {
  return names_ == o.names_ && max_exp_ == o.max_exp_ && min_exp_ == o.min_exp_;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> max_exp,
                  std::vector<int> min_exp) {
  return std::make_shared<const Ring>(std::move(names), std::move(max_exp), std::move(min_exp));
}

RingPtr scalar_ring() {
  static const RingPtr ring = make_ring({}, {});
  return ring;
}

// ---------------------------------------------------------------- LinearForm

LinearForm LinearForm::zero(const RingPtr& ring) {
  return LinearForm{std::vector<Rational>(ring->size(), Rational(0))};
}

LinearForm LinearForm::var(const RingPtr& ring, std::string_view name, const Rational& c) {
  LinearForm f = zero(ring);
  f.coeffs[static_cast<std::size_t>(ring->index_of(name))] = c;
  return f;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  if (o.coeffs.size() != coeffs.size()) throw ConfigError("linear forms over different rings");
  LinearForm r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + o * Rational(-1); }

LinearForm LinearForm::operator*(const Rational& c) const {
  LinearForm r = *this;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

int LinearForm::single_variable() const {
  int found = -1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

bool LinearForm::operator<(const LinearForm& o) const {
  return std::lexicographical_compare(coeffs.begin(), coeffs.end(), o.coeffs.begin(),
                                      o.coeffs.end());
}

bool LinearForm::operator==(const LinearForm& o) const { return coeffs == o.coeffs; }

// -------------------------------------------------------------------- Series

Series::Series(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw ConfigError("series without ring");
}

Series Series::constant(RingPtr ring, const Rational& c) {
  Series s(std::move(ring));
  s.add_term(Exponents(s.ring_->size(), 0), c);
  return s;
}

Series Series::monomial(RingPtr ring, Exponents e, const Rational& c) {
  Series s(std::move(ring));
  if (e.size() != s.ring_->size()) throw ConfigError("monomial: wrong number of exponents");
  s.add_term(e, c);
  return s;
}

Series Series::variable(RingPtr ring, std::string_view name) {
  Exponents e(ring->size(), 0);
  e[static_cast<std::size_t>(ring->index_of(name))] = 1;
  return monomial(std::move(ring), e);
}

Series Series::linear(RingPtr ring, const LinearForm& form) {
  Series s(ring);
  if (form.coeffs.size() != ring->size()) throw ConfigError("linear form over another ring");
  for (std::size_t i = 0; i < form.coeffs.size(); ++i) {
    if (form.coeffs[i] == 0) continue;
    Exponents e(ring->size(), 0);
    e[i] = 1;
    s.add_term(e, form.coeffs[i]);
  }
  return s;
}

bool Series::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x != 0) return false;
  return true;
}

Rational Series::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const {
  if (!ring_) return 0;
  return coeff(Exponents(ring_->size(), 0));
}

void Series::add_term(const Exponents& e, const Rational& c_in) {
  Rational c = c_in;
  c.canonicalize();
  if (c == 0) return;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > ring_->max_exp(i)) return;
    if (e[i] < ring_->min_exp(i))
      throw ConfigError("pole bound exceeded in variable " + ring_->name(i));
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Series::check_ring(const Series& o) const {
  if (!ring_ || !o.ring_) throw ConfigError("series without ring");
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw ConfigError("series over different rings");
}

Series& Series::operator+=(const Series& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.check_ring(b);
  Series out(a.ring_);
  const std::size_t n = a.ring_->size();
  if (n == 0) {
    if (!a.terms_.empty() && !b.terms_.empty())
      out.terms_.emplace(Exponents{}, a.terms_.begin()->second * b.terms_.begin()->second);
    return out;
  }
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      bool keep = true;
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > a.ring_->max_exp(i)) {
          keep = false;
          break;
        }
      }
      if (keep) out.add_term(e, ca * cb);
    }
  }
  return out;
}

Series& Series::operator*=(const Series& o) {
  *this = *this * o;
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Series Series::operator-() const {
  Series r = *this;
  r *= Rational(-1);
  return r;
}

bool Series::operator==(const Series& o) const {
  check_ring(o);
  return terms_ == o.terms_;
}

Exponents Series::pole_order() const {
  Exponents m(ring_->size(), 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

int Series::degree_in(std::size_t i) const {
  int d = ring_->min_exp(i) - 1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

Series Series::truncated(std::size_t i, int limit) const {
  Series r(ring_);
  for (const auto& [e, c] : terms_)
    if (e[i] <= limit) r.terms_.emplace(e, c);
  return r;
}

Series Series::truncated(const Exponents& limits) const {
  Series r(ring_);
  for (const auto& [e, c] : terms_) {
    bool keep = true;
    for (std::size_t i = 0; i < e.size(); ++i) keep = keep && e[i] <= limits[i];
    if (keep) r.terms_.emplace(e, c);
  }
  return r;
}

Series Series::in_ring(const RingPtr& target) const {
  Series r(target);
  std::vector<int> map(ring_->size(), -1);
  for (std::size_t i = 0; i < ring_->size(); ++i)
    if (target->has(ring_->name(i))) map[i] = target->index_of(ring_->name(i));
  for (const auto& [e, c] : terms_) {
    Exponents f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (map[i] < 0) {
        if (e[i] != 0) throw ConfigError("variable " + ring_->name(i) + " missing in target ring");
        continue;
      }
      f[static_cast<std::size_t>(map[i])] = e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

Series Series::negate_variable(std::size_t i) const {
  Series r = *this;
  for (auto& [e, c] : r.terms_)
    if (e[i] % 2 != 0) c = -c;
  return r;
}

Series Series::coefficient_of(std::size_t i, int n) const {
  Series r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[i] != n) continue;
    Exponents f = e;
    f[i] = 0;
    r.terms_.emplace(f, c);
  }
  return r;
}

Series Series::shifted(std::size_t i, int n) const {
  Series r(ring_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[i] += n;
    r.add_term(f, c);
  }
  return r;
}

Series Series::inverse() const {
  if (terms_.empty()) throw DomainError("inverse of zero series");
  const std::size_t n = ring_->size();
  // componentwise minimum exponent over all terms (may be positive)
  Exponents lo = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < n; ++i) lo[i] = std::min(lo[i], e[i]);
  // q = this / x^lo; 1/q is needed up to max + lo
  std::vector<int> qmax(n), qmin(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    qmax[i] = ring_->max_exp(i) + lo[i];
    if (qmax[i] < 0) return Series(ring_);
  }
  RingPtr scratch = make_ring(ring_->names(), qmax, qmin);
  Series q(scratch);
  for (const auto& [e, c] : terms_) {
    Exponents f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = e[i] - lo[i];
    q.add_term(f, c);
  }
  Rational c0 = q.constant_term();
  if (c0 == 0) throw DomainError("series is not a monomial times a unit");
  Series h = q * Rational(1 / c0) - Series::constant(scratch, 1);
  Series acc = Series::constant(scratch, 1);
  Series p = Series::constant(scratch, 1);
  Series neg_h = -h;
  while (true) {
    p = p * neg_h;
    if (p.is_zero()) break;
    acc += p;
  }
  acc *= Rational(1 / c0);
  Series out(ring_);
  for (const auto& [e, c] : acc.terms_) {
    Exponents f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = e[i] - lo[i];
    out.add_term(f, c);
  }
  return out;
}

Series Series::exp() const {
  if (constant_term() != 0) throw DomainError("exp of a series with nonzero constant term");
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) throw DomainError("exp of a Laurent series");
  Series acc = Series::constant(ring_, 1);
  Series p = Series::constant(ring_, 1);
  for (int k = 1;; ++k) {
    p = p * *this;
    p *= Rational(1, k);
    if (p.is_zero()) break;
    acc += p;
  }
  return acc;
}

Series Series::log() const {
  if (constant_term() != 1) throw DomainError("log of a series whose constant term is not 1");
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) throw DomainError("log of a Laurent series");
  Series h = *this - Series::constant(ring_, 1);
  Series acc(ring_);
  Series p = Series::constant(ring_, 1);
  for (int k = 1;; ++k) {
    p = p * h;
    if (p.is_zero()) break;
    Series term = p;
    term *= Rational(k % 2 == 1 ? 1 : -1, k);
    acc += term;
  }
  return acc;
}

Series Series::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Series result = Series::constant(ring_, 1);
  Series base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Series Series::pow(const Series& exponent) const { return (exponent * log()).exp(); }

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool unit = true;
    for (int x : e) unit = unit && x == 0;
    os << gwwedge::to_string(c);
    if (unit) continue;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << ring_->name(i);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

// -------------------------------------------------------------- FracMonomial

FracMonomial FracMonomial::operator*(const FracMonomial& o) const {
  return FracMonomial{exp_t + o.exp_t, exp_negt + o.exp_negt, exp_u + o.exp_u};
}

bool FracMonomial::operator==(const FracMonomial& o) const {
  return exp_t == o.exp_t && exp_negt == o.exp_negt && exp_u == o.exp_u;
}

TrackedSeries TrackedSeries::operator*(const TrackedSeries& o) const {
  return TrackedSeries(value_ * o.value_, mono_ * o.mono_);
}

TrackedSeries TrackedSeries::operator+(const TrackedSeries& o) const {
  if (value_.is_zero()) return o;
  if (o.value_.is_zero()) return *this;
  if (!(mono_ == o.mono_)) throw IntegrityError("adding series with different fractional prefactors");
  return TrackedSeries(value_ + o.value_, mono_);
}

Series TrackedSeries::normalized(std::string_view t_name) const {
  if (value_.is_zero()) return value_;
  Rational total = mono_.exp_t + mono_.exp_negt;
  if (total.get_den() != 1 || mono_.exp_negt.get_den() != 1)
    throw IntegrityError("fractional power of t survived: t^(" + gwwedge::to_string(mono_.exp_t) +
                         ") (-t)^(" + gwwedge::to_string(mono_.exp_negt) + ")");
  long k = total.get_num().get_si();
  long sign_exp = mono_.exp_negt.get_num().get_si();
  std::size_t ti = static_cast<std::size_t>(value_.ring()->index_of(t_name));
  Series r = value_.shifted(ti, static_cast<int>(k));
  if (sign_exp % 2 != 0) r *= Rational(-1);
  return r;
}

}  // namespace gwwedge
