#pragma once

#include <stdexcept>
#include <string>

namespace symgate {

// Numerical-precondition failures. The CLI maps these to exit code 3.
class NotUnitaryError : public std::domain_error {
 public:
  explicit NotUnitaryError(double residual)
      : std::domain_error("matrix is not unitary (residual " +
                          std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class NotHermitianError : public std::domain_error {
 public:
  explicit NotHermitianError(double residual)
      : std::domain_error("matrix is not hermitian (residual " +
                          std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Two independent computations of the same quantity drifted apart.
// Always indicates an implementation bug, never bad user input.
class InternalMismatchError : public std::logic_error {
  using std::logic_error::logic_error;
};

// Hull test and chamber-region test disagree away from the boundary.
class ClassifierMismatchError : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace symgate
