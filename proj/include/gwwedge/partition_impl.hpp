#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace gwwedge {

template <class F>
void for_each_move(const Partition& lambda, int j, F&& f) {
  const int ell = lambda.length();
  if (j == 0) {
    std::vector<char> occ(static_cast<std::size_t>(ell + 1), 0);
    for (int i = 1; i <= ell; ++i) {
      int x = lambda[i - 1] - i;
      if (x >= 0)
        f(lambda, 1, 2 * x + 1);
      else
        occ[static_cast<std::size_t>(-x)] = 1;
    }
    for (int x = -1; x >= -ell; --x)
      if (!occ[static_cast<std::size_t>(-x)]) f(lambda, -1, 2 * x + 1);
    return;
  }
  const int n = ell + std::abs(j) + 1;
  std::vector<int> x(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) x[static_cast<std::size_t>(i - 1)] = lambda[i - 1] - i;
  auto occupied = [&](int p) {
    if (p < -n) return true;
    return std::binary_search(x.begin(), x.end(), p, std::greater<int>());
  };
  std::vector<int> y(static_cast<std::size_t>(n));
  std::vector<int> parts;
  for (int idx = 0; idx < n; ++idx) {
    const int p = x[static_cast<std::size_t>(idx)];
    const int q = p - j;
    if (occupied(q)) continue;
    const int lo = std::min(p, q), hi = std::max(p, q);
    int between = 0;
    for (int v : x)
      if (v > lo && v < hi) ++between;
    y = x;
    y[static_cast<std::size_t>(idx)] = q;
    std::sort(y.begin(), y.end(), std::greater<int>());
    parts.clear();
    for (int i = 1; i <= n; ++i) {
      int part = y[static_cast<std::size_t>(i - 1)] + i;
      if (part <= 0) break;
      parts.push_back(part);
    }
    f(Partition(parts), (between % 2 == 0) ? 1 : -1, 2 * p + 1);
  }
}

}  // namespace gwwedge
