#pragma once

#include <map>
#include <string>
#include <vector>

#include "gwwedge/rational.hpp"

namespace gwwedge {

// [1]_0, [H]_0, [0]_i, [inf]_i
struct BasisClass {
  enum class Label { One, H, Zero, Inf };
  int sector = 0;
  Label label = Label::One;

  static BasisClass one() { return {0, Label::One}; }
  static BasisClass hyperplane() { return {0, Label::H}; }
  static BasisClass zero(int i) { return {i, Label::Zero}; }
  static BasisClass inf(int i) { return {i, Label::Inf}; }

  BasisClass dual() const;  // [1]^v = [H], [H]^v = [1], [0]_i^v = [0]_{-i}, [inf]_i^v = [inf]_{-i}
  std::string to_string() const;
  auto operator<=>(const BasisClass&) const = default;
};

// pairing of two basis classes
Rational pairing(const BasisClass& x, const BasisClass& y);

// one member [0]_a, [0]_{b..}, [inf]_d of the family
struct FamilyInstance {
  int a = 0;
  std::vector<int> b;
  int d = 0;
};

class InvariantEvaluator {
 public:
  enum class Mode { Recursive, ClosedForm };
  explicit InvariantEvaluator(Mode mode = Mode::Recursive) : mode_(mode) {}

  // Genus-zero relative invariant of (P^1, 0 + inf). Zero by the partition and dimension rules;
  // UnsupportedConfiguration outside the evaluated family.
  Rational I(std::vector<BasisClass> insertions, int d);

  // replace one value (keyed by the insertion multiset and degree) before evaluation
  void override_value(std::vector<BasisClass> insertions, int d, const Rational& value);

  long wdvv_instances() const { return wdvv_instances_; }
  // family members solved through a WDVV instance, in order
  const std::vector<FamilyInstance>& solved() const { return solved_; }

 private:
  using Key = std::pair<std::vector<BasisClass>, int>;
  Rational family(int a, std::vector<int> b, int d);
  Rational evaluate(const std::vector<BasisClass>& ins, int d);

  Mode mode_;
  std::map<Key, Rational> memo_;
  std::map<Key, Rational> overrides_;
  long wdvv_instances_ = 0;
  std::vector<FamilyInstance> solved_;
};

// Both sides of the WDVV equation for the four leading insertions x1..x4 and the rest split
// over S1, S2, at total degree d.
struct WdvvSides {
  Rational lhs;
  Rational rhs;
};
WdvvSides wdvv_sides(InvariantEvaluator& ev, const std::vector<BasisClass>& insertions, int d);

// The instance [0]_a, [inf]_d, [H]_0, [inf]_{-b_n}, [0]_{b_1..b_{n-1}} at D = d - b_n, lower values
// from the closed form; returns LHS - RHS.
Rational wdvv_residual(int a, const std::vector<int>& b, int d);
Rational wdvv_residual(InvariantEvaluator& ev, int a, const std::vector<int>& b, int d);

// I_d([0]_a, [0]_{b_1..b_n}, [inf]_d) = d^{n-1}
Rational family_closed_form(int a, const std::vector<int>& b, int d);

}  // namespace gwwedge
