#pragma once

#include <stdexcept>
#include <string>

namespace isoprofile {

/// Raised when an argument lies outside the mathematical domain of an
/// operation (dimension too small, volume past the total volume, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a numerical procedure fails to reach its tolerance. Carries the
/// family parameter being processed and the last residual.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double parameter, double residual)
      : std::runtime_error(what), parameter_(parameter), residual_(residual) {}

  double parameter() const noexcept { return parameter_; }
  double residual() const noexcept { return residual_; }

 private:
  double parameter_;
  double residual_;
};

}  // namespace isoprofile
