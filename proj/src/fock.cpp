#include "gwwedge/fock.hpp"

#include <climits>

#include "gwwedge/errors.hpp"

namespace gwwedge {

FockVector FockVector::vacuum(RingPtr ring) { return basis(std::move(ring), Partition()); }

FockVector FockVector::basis(RingPtr ring, const Partition& lambda) {
  FockVector v(ring);
  v.add(lambda, Series::constant(ring, 1));
  return v;
}

Series FockVector::coeff(const Partition& lambda) const {
  auto it = entries_.find(lambda);
  return it == entries_.end() ? Series(ring_) : it->second;
}

void FockVector::add(const Partition& lambda, const Series& c) {
  if (c.is_zero()) return;
  auto it = entries_.find(lambda);
  if (it == entries_.end()) {
    entries_.emplace(lambda, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) entries_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [l, c] : o.entries_) add(l, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [l, c] : o.entries_) add(l, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Series& c) {
  std::map<Partition, Series> next;
  for (auto& [l, x] : entries_) {
    Series y = x * c;
    if (!y.is_zero()) next.emplace(l, std::move(y));
  }
  entries_ = std::move(next);
  return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [l, x] : entries_) x *= c;
  return *this;
}

bool FockVector::operator==(const FockVector& o) const { return entries_ == o.entries_; }

int FockVector::min_energy() const {
  int m = INT_MAX;
  for (const auto& [l, c] : entries_) m = std::min(m, l.size());
  return m;
}

int FockVector::max_energy() const {
  int m = INT_MIN;
  for (const auto& [l, c] : entries_) m = std::max(m, l.size());
  return m;
}

FockVector FockVector::restricted(int lo, int hi) const {
  FockVector r(ring_);
  for (const auto& [l, c] : entries_) {
    int e = l.size();
    if (e >= lo && e <= hi) r.entries_.emplace(l, c);
  }
  return r;
}

Series inner(const FockVector& a, const FockVector& b) {
  Series acc(a.ring());
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& big = a.size() <= b.size() ? b : a;
  for (const auto& [l, c] : small.entries()) {
    auto it = big.entries().find(l);
    if (it != big.entries().end()) acc += c * it->second;
  }
  return acc;
}

}  // namespace gwwedge
