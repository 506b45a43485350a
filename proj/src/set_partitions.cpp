#include "gwwedge/set_partitions.hpp"

namespace gwwedge {

namespace {

void grow(int i, int n, std::vector<int>& rgs, int blocks, std::vector<SetPartition>& out) {
  if (i == n) {
    SetPartition p(static_cast<std::size_t>(blocks));
    for (int x = 0; x < n; ++x) p[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])].push_back(x);
    out.push_back(std::move(p));
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    rgs[static_cast<std::size_t>(i)] = b;
    grow(i + 1, n, rgs, b == blocks ? blocks + 1 : blocks, out);
  }
}

}  // namespace

std::vector<SetPartition> set_partitions(int n) {
  std::vector<SetPartition> out;
  if (n <= 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  grow(0, n, rgs, 0, out);
  return out;
}

std::vector<SetPartition> set_partitions_of(const std::vector<int>& labels) {
  std::vector<SetPartition> out = set_partitions(static_cast<int>(labels.size()));
  for (auto& p : out)
    for (auto& block : p)
      for (auto& x : block) x = labels[static_cast<std::size_t>(x)];
  return out;
}

Rational moebius_weight(const SetPartition& p) {
  int k = static_cast<int>(p.size());
  if (k == 0) return 1;
  Rational w = factorial(k - 1);
  return (k % 2 == 1) ? w : Rational(-w);
}

}  // namespace gwwedge
