#pragma once

#include <stdexcept>

namespace gamma2 {

// Precondition violations raise std::invalid_argument. The types below mark
// numerical conditions a caller may want to tell apart.

/// A density fell below the positivity floor at some evaluation node.
class PositivityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Rayleigh-type ratio was requested for a function whose denominator vanishes.
class UndefinedRatio : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An integrand or objective produced NaN or infinity.
class NonFiniteValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace gamma2
