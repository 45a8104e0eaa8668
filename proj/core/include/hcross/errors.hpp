#pragma once

#include <stdexcept>
#include <string>

namespace hcross {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters (majorant, Besov, quadrature or run configuration).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// (p, q, theta) combination covered by none of the rate theorems, or a
/// witness family used outside the regime it was built for.
class UnsupportedRegime : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A desk-scale cap (frequency count, grid memory, dimension) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature hit its grid cap before meeting the tolerance.
class ToleranceError : public Error {
 public:
  ToleranceError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

}  // namespace hcross
