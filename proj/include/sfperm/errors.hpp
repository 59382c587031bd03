#pragma once

#include <stdexcept>

namespace sfperm {

/// Malformed input: bad permutation, out-of-range parameter, mismatched grids.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric routine could not meet its contract (series did not converge,
/// Fisher matrix not positive definite, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request is well formed but exceeds what the routine supports,
/// e.g. exhaustive detection at large M.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sfperm
