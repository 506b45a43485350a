#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwwedge/operator.hpp"

namespace gwwedge {

// A two-element block of E(x_1..x_n, s) contributes the scalar x_i x_j / varsigma(x_i + x_j),
// which is not a series in the separate variables. Such terms are kept as
// (product of these scalars) * coefficient.
struct UnstableTerm {
  std::vector<std::pair<std::string, std::string>> pairs;
  Series coefficient;
};

struct EquivariantSeries {
  Series regular;  // variables z1.., w1.., t
  std::vector<UnstableTerm> unstable;
  std::string to_string() const;
};

// Ring z1..zn, w1..wm, t used by the generating functions below.
RingPtr equivariant_ring(int n, int m, int order, int t_degree);

// E(x_1..x_n, s) = sum_pi s^{n - l(pi)} prod_blocks T(x_B) E_0(|x_B|), split into the regular
// operator and the unstable pieces: each returned entry is (pairs taken as scalars, operator).
std::vector<std::pair<std::vector<std::pair<std::string, std::string>>, WedgeOperator>> e_block_terms(
    const RingPtr& ring, const std::vector<std::string>& vars, const Series& s);

// A(z) restricted to E_k(z) with k in [kmin, kmax]; dual=true gives A^*(z) (adjoint, t -> -t).
WedgeOperator a_operator(const RingPtr& ring, const std::string& var, int kmin, int kmax, bool dual);

// <prod alpha_mu/mu E(z, t) e^{alpha_{-1}} A^*(w)>, m <= 1
EquivariantSeries eq_cap_gf(const std::vector<int>& mu, int n, int m, int order);
// <prod alpha_mu/mu E(z, t) E(w, -t) prod alpha_{-nu}/nu>
EquivariantSeries eq_tube_gf(const std::vector<int>& mu, const std::vector<int>& nu, int n, int m, int order);
// <A(z) e^{alpha_1} E(w, -t) prod alpha_{-nu}/nu>, n <= 1
EquivariantSeries eq_cap_infinity_gf(const std::vector<int>& nu, int n, int m, int order);

}  // namespace gwwedge
