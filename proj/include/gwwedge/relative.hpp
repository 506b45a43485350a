#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwwedge/expectation.hpp"
#include "gwwedge/operator.hpp"
#include "gwwedge/set_partitions.hpp"

namespace gwwedge {

// Contact orders over 0 (and over infinity for the tube) plus stationary
// insertions tau_k(omega).
struct ContactData {
  std::vector<int> mu0;
  std::vector<int> mu_inf;
  std::vector<int> insertions;  // descendant indices k
  bool tube = false;

  int degree() const;
  std::vector<int> positive0() const;
  std::vector<int> negative0() const;
  std::vector<int> positive_inf() const;
  std::vector<int> negative_inf() const;
  void validate() const;  // DomainError on inconsistent data
  std::string to_string() const;
};

// N_{b_P} = prod_j (l(P_j)-1)! prod_{i>=2} (b_{P_j})_i
Rational N_weight(const std::vector<int>& b, const SetPartition& P);
// signed sum of the entries of b in a block
int block_sum(const std::vector<int>& b, const std::vector<int>& block);

// sum_P N_{b_P} E_{|b_{P_1}|}[0] ... E_{|b_{P_k}|}[0], blocks ordered by smallest element
WedgeOperator negative_contact_block(const std::vector<int>& b);

// {alpha_a, E_{b_P}[0]} reduced through [alpha_j, E_k[0]] = j alpha_{j+k}
WedgeOperator nested_bracket(int a, const std::vector<int>& b, const SetPartition& P);
// the same nested commutator built literally from operators
WedgeOperator nested_bracket_literal(int a, const std::vector<int>& b, const SetPartition& P);

struct LemmaReport {
  bool passed = true;
  int checks = 0;
  std::string detail;
};
// sum_P N {alpha_a, E_{b_P}[0]} = a (a + sum b)^{n-1} alpha_{a + sum b}, on all states up to cap
LemmaReport verify_lemma_comb(int a, const std::vector<int>& b, int energy_cap);

// operator lists of the closed forms (without the rational prefactor)
Rational cap_invariant(const ContactData& cd);
Rational tube_invariant(const ContactData& cd);
Rational invariant(const ContactData& cd);

// connected one-point function sum_k z^{k+1} <mu0|tau_k(omega)|mu_inf>^o, closed form
Series one_point_tube_connected(const ContactData& cd, int order);
// the same from the ordered cumulant of the operator formula
Series one_point_tube_connected_vev(const ContactData& cd, int order);
// disconnected one-point generating function from the operator formula
Series one_point_tube_disconnected(const ContactData& cd, int order);

Rational genus0_hodge(const std::vector<Rational>& a);
Rational coeff_CP(const std::vector<int>& b_block, const Rational& r);

// Both sides of the rederivation of the coefficients C_P(r): the sum over partitions
// with more than one block plus the single-block term, against (a + sum b)^{m-1}.
struct DetCoeffCheck {
  Rational operator_side;
  Rational closed_form;
};
DetCoeffCheck detcoeff_rederivation(int a, const std::vector<int>& b, const Rational& r);

}  // namespace gwwedge
