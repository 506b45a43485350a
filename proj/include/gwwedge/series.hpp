#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gwwedge/rational.hpp"

namespace gwwedge {

// Variable names with per-variable truncation (largest kept exponent) and pole
// bound (smallest allowed exponent, <= 0).
class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<int> max_exp, std::vector<int> min_exp = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int max_exp(std::size_t i) const { return max_exp_[i]; }
  int min_exp(std::size_t i) const { return min_exp_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(std::string_view name) const;  // throws ConfigError
  bool has(std::string_view name) const;

  bool operator==(const Ring& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> max_exp_;
  std::vector<int> min_exp_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> max_exp,
                  std::vector<int> min_exp = {});
RingPtr scalar_ring();

using Exponents = std::vector<int>;

// Linear form sum_i c_i x_i over the variables of a ring.
struct LinearForm {
  std::vector<Rational> coeffs;

  static LinearForm zero(const RingPtr& ring);
  static LinearForm var(const RingPtr& ring, std::string_view name, const Rational& c = 1);
  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator*(const Rational& c) const;
  bool is_zero() const;
  // index of the only nonzero coefficient, -1 otherwise
  int single_variable() const;
  bool operator<(const LinearForm& o) const;
  bool operator==(const LinearForm& o) const;
};

class Series {
 public:
  Series() = default;
  explicit Series(RingPtr ring);

  static Series constant(RingPtr ring, const Rational& c);
  static Series monomial(RingPtr ring, Exponents e, const Rational& c = 1);
  static Series variable(RingPtr ring, std::string_view name);
  static Series linear(RingPtr ring, const LinearForm& form);

  const RingPtr& ring() const { return ring_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(const Exponents& e) const;
  Rational constant_term() const;
  std::size_t num_terms() const { return terms_.size(); }

  // Adds c * x^e; silently drops terms above truncation, throws below the pole bound.
  void add_term(const Exponents& e, const Rational& c);

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  Series& operator*=(const Rational& c);
  Series operator-() const;

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }
  bool operator==(const Series& o) const;
  bool operator!=(const Series& o) const { return !(*this == o); }

  // Smallest exponent of each variable among stored terms (0 if absent).
  Exponents pole_order() const;
  // Largest total exponent in variable i among stored terms.
  int degree_in(std::size_t i) const;
  // Drop every term with exponent of variable i above limit.
  Series truncated(std::size_t i, int limit) const;
  Series truncated(const Exponents& limits) const;
  // Same terms in another (compatible-by-name) ring; names missing in target must have exponent 0.
  Series in_ring(const RingPtr& target) const;
  // x_i -> -x_i
  Series negate_variable(std::size_t i) const;
  // x_i^n coefficient as a series in the same ring (x_i exponent set to 0).
  Series coefficient_of(std::size_t i, int n) const;
  Series shifted(std::size_t i, int n) const;  // multiply by x_i^n

  Series inverse() const;
  Series exp() const;
  Series log() const;
  Series pow(int n) const;
  Series pow(const Series& exponent) const;

  std::string to_string() const;

 private:
  void check_ring(const Series& o) const;
  RingPtr ring_;
  std::map<Exponents, Rational> terms_;
};

// Global monomial t^{exp_t} (-t)^{exp_negt} u^{exp_u} with rational t-exponents.
struct FracMonomial {
  Rational exp_t = 0;
  Rational exp_negt = 0;
  int exp_u = 0;

  FracMonomial operator*(const FracMonomial& o) const;
  bool operator==(const FracMonomial& o) const;
};

// A series in t together with a fractional prefactor.
class TrackedSeries {
 public:
  TrackedSeries(Series value, FracMonomial mono) : value_(std::move(value)), mono_(mono) {}
  const Series& value() const { return value_; }
  const FracMonomial& monomial() const { return mono_; }

  TrackedSeries operator*(const TrackedSeries& o) const;
  TrackedSeries operator+(const TrackedSeries& o) const;  // IntegrityError on mismatched monomials

  // Absorbs t^{k}(-t)^{l} into the series; IntegrityError if a fractional part remains.
  Series normalized(std::string_view t_name) const;

 private:
  Series value_;
  FracMonomial mono_;
};

}  // namespace gwwedge
