#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minuscule {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidLabel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Orbit or group closure exceeded its cap; the message names the cap.
struct CapExceeded : std::runtime_error {
  std::int64_t cap;
  CapExceeded(const std::string& what, std::int64_t cap_)
      : std::runtime_error(what + " (cap " + std::to_string(cap_) + ")"), cap(cap_) {}
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotDominant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Triangle witness, first component not colinear to a minuscule coweight.
struct UnsupportedTriangle : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Componentwise conjugacy fails, so no witness can exist.
struct NoWitnessPossible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The stabilizer-orbit search came up empty; flagged as critical because a
// correct implementation should never reach this state.
struct WitnessSearchFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace minuscule
