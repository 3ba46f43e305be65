#pragma once

#include <stdexcept>
#include <string>

namespace resonantk {

/// Input violates a structural invariant (bad file, non-cubic vertex,
/// wrong face sizes, overlapping hexagons, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive computation would exceed its configured work guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace resonantk
