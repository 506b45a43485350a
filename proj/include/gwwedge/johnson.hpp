#pragma once

#include <optional>
#include <vector>

#include "gwwedge/operator.hpp"
#include "gwwedge/relative.hpp"

namespace gwwedge {

enum class EquivariantMode { Full, TZero };

struct Age {
  int numerator = 0;  // a with 0 <= a < r (negative contact b enters as r + b)
  int psi = 0;        // descendant power k: the z^{k+1} coefficient is taken
};

struct OrbifoldRequest {
  int r = 1;
  int s = 1;
  int d = 1;
  std::vector<Age> left;   // A_{a/r} factors, in order
  std::vector<Age> right;  // A^*_{a/s} factors, in order
  EquivariantMode mode = EquivariantMode::TZero;
  bool include_exp_r = true;  // keep e^{t alpha_r / r}
  int t_degree = 4;           // full mode: t-truncation of the result
};

// The coefficient series c_i(z) of E_{ir+a}(z) in A_{a/r}(z) (u = 1), with the t-prefactor
// t^{a/r + i} removed. Ring {z} in t_zero mode, {z, t} in full mode.
Series a_coefficient(const RingPtr& ring, int a, int r, int i, EquivariantMode mode);

// z^{k+1} coefficient of c_i(z) E_{ir+a}(z) as an operator with scalar modes in `target`.
WedgeOperator a_term(const RingPtr& target, int a, int r, int k, int i, EquivariantMode mode);

// Johnson's bracket, coefficient of q^d and of one x per factor. Ring scalar in t_zero mode,
// {t} in full mode. The fractional t and (-t) prefactors must cancel (IntegrityError otherwise).
Series orbifold_bracket(const OrbifoldRequest& req);

// Age list of a contact vector: positive a -> a, negative b -> r + b, then stationary insertions.
std::vector<Age> ages_of(const std::vector<int>& mu, int r, const std::vector<int>& insertions = {});

struct LimitResult {
  Rational value;                  // constant term
  std::vector<Rational> samples;   // r values used
  std::vector<Rational> values;    // r^{rho_-} * bracket at each sample
  std::vector<Rational> polynomial;  // coefficients in r, low to high
};

// [r^0] of r^{m_0} s^{m_inf} <...> via a polynomial fit over the samples (s = r for tubes, s = 1 for caps).
// Empty samples pick r = R..R+degree_bound+1 with R the smallest admissible r.
LimitResult relative_via_limit(const ContactData& cd, std::vector<int> r_samples = {},
                               std::optional<int> degree_bound = {});

// smallest r with r > d, r > sum |mu0| and, for tubes, r > sum |mu_inf|
int smallest_admissible_r(const ContactData& cd);

}  // namespace gwwedge
