#include "gwwedge/partition.hpp"

#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "gwwedge/errors.hpp"

namespace gwwedge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::deque<std::vector<Partition>> table;
  if (n < 0) {
    static const std::vector<Partition> empty;
    return empty;
  }
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n) {
    int m = static_cast<int>(table.size());
    std::vector<Partition> out;
    std::vector<int> cur;
    generate(m, m, cur, out);
    table.push_back(std::move(out));
  }
  return table[static_cast<std::size_t>(n)];
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m) {
    const auto& ps = partitions_of(m);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

HalfInteger HalfInteger::from_twice(int t) {
  if (t % 2 == 0) throw DomainError("not a half-integer");
  return HalfInteger{t};
}

MayaView maya(const Partition& lambda) {
  MayaView v;
  const int ell = lambda.length();
  std::set<int> occupied;
  for (int i = 1; i <= ell; ++i) {
    int x = lambda[i - 1] - i;
    occupied.insert(x);
    if (x >= 0) v.occupied_positive.push_back(HalfInteger::plus_half(x));
  }
  for (int x = -1; x >= -ell; --x)
    if (!occupied.count(x)) v.vacant_negative.push_back(HalfInteger::plus_half(x));
  return v;
}

Partition from_maya(const MayaView& view) {
  if (view.occupied_positive.size() != view.vacant_negative.size())
    throw DomainError("Maya diagram with nonzero charge");
  std::set<int> pos, vac;
  for (auto h : view.occupied_positive) {
    if (!h.positive()) throw DomainError("occupied_positive holds a negative position");
    pos.insert(h.floor());
  }
  for (auto h : view.vacant_negative) {
    if (h.positive()) throw DomainError("vacant_negative holds a positive position");
    vac.insert(h.floor());
  }
  int depth = vac.empty() ? 0 : -*vac.begin();
  // occupied positions in decreasing order: positives, then negatives down to -depth-1 minus vacancies
  std::vector<int> xs(pos.rbegin(), pos.rend());
  for (int x = -1; x >= -depth; --x)
    if (!vac.count(x)) xs.push_back(x);
  std::vector<int> parts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    int part = xs[i] + static_cast<int>(i) + 1;
    if (part < 0) throw DomainError("inconsistent Maya diagram");
    if (part > 0) parts.push_back(part);
  }
  return Partition(parts);
}

std::optional<std::pair<Partition, int>> fermion_bilinear(HalfInteger a, HalfInteger b,
                                                          const Partition& lambda) {
  int pa = a.floor(), pb = b.floor();
  std::optional<std::pair<Partition, int>> result;
  if (pa == pb) {
    const int ell = lambda.length();
    bool occ = false;
    for (int i = 1; i <= ell + 1 && !occ; ++i) occ = (lambda[i - 1] - i == pa);
    if (pa < -ell - 1) occ = true;
    if (a.positive() && occ) result.emplace(lambda, 1);
    if (!a.positive() && !occ) result.emplace(lambda, -1);
    return result;
  }
  // psi_a psi_b^* moves a particle from b to a; energy drops by b - a
  for_each_move(lambda, pb - pa, [&](const Partition& target, int sign, int twice_k) {
    if (twice_k == b.twice) result.emplace(target, sign);
  });
  return result;
}

}  // namespace gwwedge
