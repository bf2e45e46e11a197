#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace mbhankel {

// Base of every numeric failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument within 1e-12 of a Gamma-function pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Result magnitude exceeds the double range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A series, continued fraction, quadrature or contour failed to reach its
// target. best_bound carries the smallest error bound that was achieved.
class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what,
                            double best_bound = std::numeric_limits<double>::infinity())
      : Error(what), best_bound_(best_bound) {}

  double best_bound() const noexcept { return best_bound_; }

 private:
  double best_bound_;
};

// Coefficient continuation grows too fast along vertical lines for the
// contour representation to converge.
class GrowthError : public Error {
 public:
  using Error::Error;
};

}  // namespace mbhankel
