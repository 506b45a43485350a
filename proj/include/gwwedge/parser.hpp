#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gwwedge/operator.hpp"

namespace gwwedge {

// Prefix expressions such as (* (alpha 1) (E 0 z) (alpha -1)).
//   (alpha j)   (E j x)   (E j x nodelta)   (Ek j k)   (H)   (id)
//   (* o ...)   (+ o ...)   (comm o o)   (scale p/q o)   (exp p/q m)
// ConfigError on malformed input.
struct SExpr {
  std::string atom;  // set for atoms
  std::vector<SExpr> items;
  bool is_atom() const { return items.empty() && !atom.empty(); }
};

SExpr parse_sexpr(std::string_view text);

// variable names used by E series, in order of first appearance
std::vector<std::string> expression_variables(const SExpr& e);

WedgeOperator build_operator(const SExpr& e, const RingPtr& ring);

// top-level factors of a product (the expression itself otherwise)
std::vector<WedgeOperator> build_factors(const SExpr& e, const RingPtr& ring);

// "2,-1" -> {2, -1}; empty string -> {}
std::vector<int> parse_int_list(std::string_view text);

}  // namespace gwwedge
