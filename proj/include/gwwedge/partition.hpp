#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gwwedge {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // weakly decreasing, positive; trailing zeros dropped

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n, memoized.
const std::vector<Partition>& partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);

// Half-integer stored as twice its value (always odd).
struct HalfInteger {
  int twice = 1;
  static HalfInteger from_twice(int t);
  static HalfInteger plus_half(int m) { return from_twice(2 * m + 1); }  // m + 1/2
  int floor() const { return (twice - 1) / 2; }                          // m for m + 1/2
  bool positive() const { return twice > 0; }
  auto operator<=>(const HalfInteger&) const = default;
  bool operator==(const HalfInteger&) const = default;
};

// Occupied positive positions and vacant negative positions of {lambda_i - i + 1/2}.
struct MayaView {
  std::vector<HalfInteger> occupied_positive;
  std::vector<HalfInteger> vacant_negative;
};

MayaView maya(const Partition& lambda);
Partition from_maya(const MayaView& view);  // throws DomainError on nonzero charge

// :psi_a psi_b^*: applied to v_lambda: (target, sign) or nothing.
std::optional<std::pair<Partition, int>> fermion_bilinear(HalfInteger a, HalfInteger b,
                                                          const Partition& lambda);

// Visits every term of sum_k c(k) E_{k-j,k} v_lambda: callback(target, sign, twice_k)
// where k is the occupied source. For j = 0 the normal-ordered diagonal terms are reported
// with target = lambda and sign +1 / -1.
template <class F>
void for_each_move(const Partition& lambda, int j, F&& f);

}  // namespace gwwedge

#include "gwwedge/partition_impl.hpp"
