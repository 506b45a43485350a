#pragma once

#include <stdexcept>
#include <string>

namespace gwwedge {

// Mismatched rings, bad operator trees, malformed input.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mathematically undefined request (log of a series without unit constant term,
// ages out of range, a + b = 0 in the two-point Hodge integral, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A fractional power of t survived normalization.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A user-supplied energy cap dropped a component that could still contribute.
struct CapTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside what a recursion knows how to reduce.
struct UnsupportedConfiguration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The interpolation in r did not stabilise.
struct DegreeBoundTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gwwedge
