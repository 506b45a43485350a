#pragma once

#include <map>

#include "gwwedge/partition.hpp"
#include "gwwedge/series.hpp"

namespace gwwedge {

// Finite combination of basis vectors v_lambda with series coefficients.
class FockVector {
 public:
  explicit FockVector(RingPtr ring) : ring_(std::move(ring)) {}

  static FockVector vacuum(RingPtr ring);
  static FockVector basis(RingPtr ring, const Partition& lambda);

  const RingPtr& ring() const { return ring_; }
  const std::map<Partition, Series>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Series coeff(const Partition& lambda) const;

  void add(const Partition& lambda, const Series& c);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Series& c);
  FockVector& operator*=(const Rational& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  bool operator==(const FockVector& o) const;

  int min_energy() const;  // INT_MAX if empty
  int max_energy() const;  // INT_MIN if empty
  FockVector restricted(int lo, int hi) const;

 private:
  RingPtr ring_;
  std::map<Partition, Series> entries_;
};

Series inner(const FockVector& a, const FockVector& b);

}  // namespace gwwedge
