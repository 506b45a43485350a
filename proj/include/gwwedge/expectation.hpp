#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwwedge/operator.hpp"

namespace gwwedge {

// <O_1 ... O_n> with exact energy pruning. A cap that drops a contributing
// component raises CapTooSmall.
Series vev(const std::vector<WedgeOperator>& ops, const RingPtr& ring, std::optional<int> cap = {});
Series vev(const WedgeOperator& op, const RingPtr& ring, std::optional<int> cap = {});

// Ordered cumulant: sum over set partitions of {1..n} with Moebius weight
// (-1)^{k-1} (k-1)!, each block keeping the original operator order.
Series connected_vev(const std::vector<WedgeOperator>& ops, const RingPtr& ring,
                     std::optional<int> cap = {});

struct CommutationReport {
  bool passed = true;
  int checks = 0;
  std::vector<std::string> failures;
};

// [E_j(z), E_k(w)] = varsigma(jw - kz) E_{j+k}(z + w) on every state of energy <= cap.
CommutationReport verify_commutation(int j, int k, int order, int energy_cap);
// [alpha_j, alpha_k] = j delta_{j+k,0}
CommutationReport verify_alpha_commutation(int j, int k, int energy_cap);
// [alpha_j, E_k[0]] = j alpha_{j+k} (zero when j + k = 0)
CommutationReport verify_alpha_e0_commutation(int j, int k, int energy_cap);
// the adjoint relation on states: <lambda| O mu> = <O^* lambda| mu>
CommutationReport verify_adjoint(const WedgeOperator& op, const RingPtr& ring, int energy_cap);

}  // namespace gwwedge
