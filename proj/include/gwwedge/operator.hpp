#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gwwedge/fock.hpp"
#include "gwwedge/series.hpp"

namespace gwwedge {

// Rational factor, optionally times a series.
struct Scalar {
  Rational q = 1;
  std::optional<Series> s;

  Scalar() = default;
  Scalar(Rational r) : q(std::move(r)) {}  // NOLINT
  Scalar(Series x) : s(std::move(x)) {}   // NOLINT
  Series times(const Series& v) const;
  Scalar operator*(const Scalar& o) const;
  bool is_zero() const;
  std::string to_string() const;
};

// Energy change (after - before); +-kInfinite means unbounded.
struct EnergyRange {
  static constexpr long kInfinite = 1L << 40;
  long lo = 0;
  long hi = 0;
};

class WedgeOperator {
 public:
  enum class Kind { Identity, Alpha, ESeries, ECoeff, EModes, Energy, Project, ExpAlpha, Scaled, Product, Sum };

  struct Node {
    Kind kind = Kind::Identity;
    int j = 0;             // Alpha, E*, Project level, ExpAlpha mode
    int k = 0;             // ECoeff
    LinearForm arg;        // ESeries
    bool with_delta = true;
    std::vector<Scalar> modes;  // EModes: modes[m] multiplies [z^(m-1)] E_j(z)
    Scalar factor;              // Scaled, ExpAlpha
    std::vector<WedgeOperator> children;
  };

  WedgeOperator();  // identity

  static WedgeOperator identity();
  static WedgeOperator zero();
  static WedgeOperator alpha(int j);
  static WedgeOperator e_series(int j, LinearForm arg, bool with_delta = true);
  static WedgeOperator e_coeff(int j, int k);
  static WedgeOperator e_modes(int j, std::vector<Scalar> modes);
  static WedgeOperator energy();
  static WedgeOperator project(int level);
  static WedgeOperator exp_alpha(Scalar c, int m);
  static WedgeOperator scaled(Scalar f, WedgeOperator op);
  static WedgeOperator product(std::vector<WedgeOperator> factors);
  static WedgeOperator sum(std::vector<WedgeOperator> terms);
  static WedgeOperator commutator(const WedgeOperator& a, const WedgeOperator& b);

  Kind kind() const { return node_->kind; }
  const Node& node() const { return *node_; }
  EnergyRange energy_range() const;
  std::string to_string() const;

  WedgeOperator operator*(const WedgeOperator& o) const { return product({*this, o}); }
  WedgeOperator operator+(const WedgeOperator& o) const { return sum({*this, o}); }

 private:
  explicit WedgeOperator(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static WedgeOperator make(Node n);
  std::shared_ptr<const Node> node_;
};

// Adjoint; optionally substitutes x -> -x for one ring variable inside scalars.
WedgeOperator adjoint(const WedgeOperator& op, std::optional<std::string> negate_var = {});

struct ApplyContext {
  std::optional<int> cap;
  bool cap_hit = false;
};

// Output components restricted to energies in [lo, hi]; exact on that window.
FockVector apply_window(const WedgeOperator& op, const FockVector& v, long lo, long hi,
                        ApplyContext& ctx);
// Full image (throws ConfigError for unbounded raising without a cap).
FockVector apply(const WedgeOperator& op, const FockVector& v, std::optional<int> cap = {});

}  // namespace gwwedge
