#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gwwedge/operator.hpp"

namespace gwwedge {

// Operator of energy k*r + b; k is the r-energy.
struct GradedOp {
  WedgeOperator op;
  int k = 0;
  int b = 0;
};

GradedOp bracket(const GradedOp& x, const GradedOp& y);

// Directed forest on a vertex set; edge (j, i) means vertex j interacts into i < j.
struct InteractionDiagram {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;  // sorted

  void validate() const;  // DomainError unless j > i and at most one outgoing edge per vertex
  bool connected() const;
  // components ordered by their smallest vertex
  std::vector<InteractionDiagram> components() const;
  std::string to_json() const;
  bool operator==(const InteractionDiagram& o) const { return vertices == o.vertices && edges == o.edges; }
  bool operator<(const InteractionDiagram& o) const {
    return std::tie(vertices, edges) < std::tie(o.vertices, o.edges);
  }
};

// Every diagram on {1..n}: each vertex j > 1 has no outgoing edge or one edge to some i < j.
std::vector<InteractionDiagram> all_diagrams(int n);

// The recursion F_n. DomainError unless the r-energies sum to 0.
WedgeOperator F_n(const std::vector<GradedOp>& ops);
// Diagrams recorded by running the same recursion on r-energy labels only.
std::vector<InteractionDiagram> recursion_diagrams(const std::vector<int>& k);

// The readout algorithm; vertex v of J carries ops[v - 1].
WedgeOperator L_of_J(const InteractionDiagram& J, const std::vector<GradedOp>& ops);
// The same nested bracket as text, vertex v printed as names[v - 1].
std::string L_of_J_expression(const InteractionDiagram& J, const std::vector<std::string>& names);

// Replays the readout algorithm on labels: every step must move the first positive factor
// (the first factor is asserted non-positive), and all final labels must vanish.
bool is_valid(const InteractionDiagram& J, const std::vector<int>& k);
// Valid diagrams on {1..n}, sorted. Depends on the labels only.
std::vector<InteractionDiagram> enumerate_K(const std::vector<int>& k);

WedgeOperator G_n_connected(const std::vector<GradedOp>& ops);

// Component criterion: J valid <=> each component valid for its own sub-list of labels.
bool component_criterion_holds(const InteractionDiagram& J, const std::vector<int>& k);

// Operator equality on every basis state of energy <= cap (scalar coefficients).
bool operators_agree(const WedgeOperator& x, const WedgeOperator& y, int cap);

struct DiagramSuiteReport {
  bool passed = true;
  long signatures = 0;
  long diagrams = 0;
  long operator_checks = 0;
  std::vector<std::string> failures;
};

// For every label vector in {lo..hi}^n summing to 0, n <= max_n: recursion diagrams = valid set,
// the component criterion on all diagrams, and (if operator_cap >= 0) F_n = sum_K L(J) as operators.
DiagramSuiteReport verify_diagram_suite(int max_n, int lo, int hi, int operator_cap);

// Both sides of the large-r expansion of <L1 A_{a_1}(z_1)...A_{a_n}(z_n) L2> at t = 0,
// coefficient by coefficient for exponents -1..order in each z_i.
struct LemmaBasicReport {
  bool direct_agrees = false;        // LHS against the sum over partitions of sum_m G
  bool f_form_agrees = false;        // LHS against the sum over partitions of f E
  bool proportional = false;         // sum_m G = f E on a second matrix element
  long coefficients = 0;
  std::map<std::vector<int>, Series> f;  // block (0-based) -> f, ring z1..zn
  std::vector<std::string> failures;
  bool passed() const { return direct_agrees && f_form_agrees && proportional; }
};

// DomainError unless r > sum |a_i|.
LemmaBasicReport verify_lemma_basic(const std::vector<int>& a, int r, const WedgeOperator& L1,
                                    const WedgeOperator& L2, int order);

}  // namespace gwwedge
