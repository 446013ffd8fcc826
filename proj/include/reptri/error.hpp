#pragma once

#include <stdexcept>
#include <string>

namespace reptri {

// Raised when a value violates a domain bound (spec, triple parameters,
// family inequality, search range). The message names the violated bound.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A digit for which no corollary construction exists.
class UnsupportedDigitError : public ConstraintError {
 public:
  using ConstraintError::ConstraintError;
};

}  // namespace reptri
