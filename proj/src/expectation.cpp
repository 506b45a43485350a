#include "gwwedge/expectation.hpp"

#include <functional>
#include <map>

#include "gwwedge/errors.hpp"
#include "gwwedge/special.hpp"

namespace gwwedge {

Series vev(const std::vector<WedgeOperator>& ops, const RingPtr& ring, std::optional<int> cap) {
  ApplyContext ctx;
  ctx.cap = cap;
  FockVector v = apply_window(WedgeOperator::product(ops), FockVector::vacuum(ring), 0, 0, ctx);
  if (ctx.cap_hit) throw CapTooSmall("energy cap truncated a contributing component");
  return v.coeff(Partition());
}

Series vev(const WedgeOperator& op, const RingPtr& ring, std::optional<int> cap) {
  return vev(std::vector<WedgeOperator>{op}, ring, cap);
}

Series connected_vev(const std::vector<WedgeOperator>& ops, const RingPtr& ring,
                     std::optional<int> cap) {
  const int n = static_cast<int>(ops.size());
  if (n > 24) throw ConfigError("connected_vev: too many operators");
  if (n == 0) return Series::constant(ring, 1);
  std::vector<EnergyRange> ranges;
  for (const auto& op : ops) ranges.push_back(op.energy_range());
  // a subset whose total energy change excludes 0 has vanishing expectation
  auto feasible = [&](unsigned mask) {
    long lo = 0, hi = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        lo += std::max(ranges[static_cast<std::size_t>(i)].lo, -EnergyRange::kInfinite / 64);
        hi += std::min(ranges[static_cast<std::size_t>(i)].hi, EnergyRange::kInfinite / 64);
      }
    return lo <= 0 && hi >= 0;
  };
  std::map<unsigned, Series> moments, cumulants;
  auto moment = [&](unsigned mask) -> const Series& {
    auto it = moments.find(mask);
    if (it != moments.end()) return it->second;
    Series value(ring);
    if (mask == 0) {
      value = Series::constant(ring, 1);
    } else if (feasible(mask)) {
      std::vector<WedgeOperator> sub;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(ops[static_cast<std::size_t>(i)]);
      value = vev(sub, ring, cap);
    }
    return moments.emplace(mask, std::move(value)).first->second;
  };
  // <S> = sum over blocks B containing min S of kappa(B) <S \ B>, which is the
  // Moebius-weighted sum over set partitions with each block kept in order
  std::function<const Series&(unsigned)> kappa = [&](unsigned mask) -> const Series& {
    auto it = cumulants.find(mask);
    if (it != cumulants.end()) return it->second;
    Series value = moment(mask);
    const unsigned low = mask & (~mask + 1);
    const unsigned rest = mask ^ low;
    if (rest == 0) return cumulants.emplace(mask, std::move(value)).first->second;
    // proper blocks B = low + (proper subset of rest)
    for (unsigned sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
      const unsigned block = low | sub;
      const unsigned other = mask ^ block;
      if (feasible(block) && feasible(other)) {
        const Series& m = moment(other);
        if (!m.is_zero()) {
          const Series& k = kappa(block);
          if (!k.is_zero()) value -= k * m;
        }
      }
      if (sub == 0) break;
    }
    return cumulants.emplace(mask, std::move(value)).first->second;
  };
  return kappa((1u << n) - 1);
}

namespace {

void compare(const FockVector& lhs, const FockVector& rhs, const std::string& label,
             const Partition& state, CommutationReport& report) {
  ++report.checks;
  if (lhs == rhs) return;
  report.passed = false;
  if (report.failures.size() < 10) report.failures.push_back(label + " on " + state.to_string());
}

}  // namespace

CommutationReport verify_commutation(int j, int k, int order, int energy_cap) {
  CommutationReport report;
  RingPtr ring = make_ring({"z", "w"}, {order, order}, {-1, -1});
  LinearForm z = LinearForm::var(ring, "z"), w = LinearForm::var(ring, "w");
  using W = WedgeOperator;
  W Ej = W::e_series(j, z), Ek = W::e_series(k, w);
  W rhs = W::zero();
  if (j + k != 0) {
    rhs = W::scaled(varsigma(ring, w * Rational(j) - z * Rational(k)), W::e_series(j + k, z + w, false));
  } else if (j != 0) {
    // varsigma(jx)/varsigma(x) = j S(jx)/S(x) as a power series in x = z + w
    int total = 2 * order;
    std::vector<Rational> sj = S_coeffs(total), inv = inv_S_coeffs(total);
    std::vector<Rational> ratio(static_cast<std::size_t>(total + 1), Rational(0));
    for (int a = 0; a <= total; ++a)
      for (int b = 0; a + b <= total; ++b)
        ratio[static_cast<std::size_t>(a + b)] +=
            Rational(j) * sj[static_cast<std::size_t>(a)] * power(Rational(j), a) * inv[static_cast<std::size_t>(b)];
    W scalar = W::scaled(substitute(ring, ratio, 0, z + w), W::identity());
    rhs = W::sum({W::scaled(varsigma(ring, (z + w) * Rational(j)), W::e_series(0, z + w, false)), scalar});
  }
  std::string label = "[E_" + std::to_string(j) + "(z),E_" + std::to_string(k) + "(w)]";
  for (const auto& lambda : partitions_up_to(energy_cap)) {
    FockVector v = FockVector::basis(ring, lambda);
    FockVector lhs = apply(Ej, apply(Ek, v)) - apply(Ek, apply(Ej, v));
    compare(lhs, apply(rhs, v), label, lambda, report);
  }
  return report;
}

CommutationReport verify_alpha_commutation(int j, int k, int energy_cap) {
  CommutationReport report;
  RingPtr ring = scalar_ring();
  using W = WedgeOperator;
  W lhs = W::commutator(W::alpha(j), W::alpha(k));
  W rhs = (j + k == 0) ? W::scaled(Rational(j), W::identity()) : W::zero();
  std::string label = "[alpha_" + std::to_string(j) + ",alpha_" + std::to_string(k) + "]";
  for (const auto& lambda : partitions_up_to(energy_cap)) {
    FockVector v = FockVector::basis(ring, lambda);
    compare(apply(lhs, v), apply(rhs, v), label, lambda, report);
  }
  return report;
}

CommutationReport verify_alpha_e0_commutation(int j, int k, int energy_cap) {
  CommutationReport report;
  RingPtr ring = scalar_ring();
  using W = WedgeOperator;
  W lhs = W::commutator(W::alpha(j), W::e_coeff(k, 0));
  W rhs = (j + k == 0) ? W::zero() : W::scaled(Rational(j), W::alpha(j + k));
  std::string label = "[alpha_" + std::to_string(j) + ",E_" + std::to_string(k) + "[0]]";
  for (const auto& lambda : partitions_up_to(energy_cap)) {
    FockVector v = FockVector::basis(ring, lambda);
    compare(apply(lhs, v), apply(rhs, v), label, lambda, report);
  }
  return report;
}

CommutationReport verify_adjoint(const WedgeOperator& op, const RingPtr& ring, int energy_cap) {
  CommutationReport report;
  WedgeOperator star = adjoint(op);
  auto states = partitions_up_to(energy_cap);
  std::map<Partition, FockVector> image, star_image;
  for (const auto& l : states) {
    image.emplace(l, apply(op, FockVector::basis(ring, l)));
    star_image.emplace(l, apply(star, FockVector::basis(ring, l)));
  }
  for (const auto& l : states) {
    for (const auto& m : states) {
      ++report.checks;
      if (image.at(m).coeff(l) == star_image.at(l).coeff(m)) continue;
      report.passed = false;
      if (report.failures.size() < 10)
        report.failures.push_back("adjoint mismatch " + l.to_string() + " " + m.to_string());
    }
  }
  return report;
}

}  // namespace gwwedge
