#pragma once

#include <stdexcept>
#include <string>

namespace bellbox {

/// A state failed the product condition c11*c22 == c12*c21 beyond tolerance.
class NotSeparable : public std::domain_error {
 public:
  NotSeparable(double defect, double tol)
      : std::domain_error("state is not separable: |defect| = " +
                          std::to_string(defect) + " exceeds tolerance " +
                          std::to_string(tol)),
        defect_(defect) {}

  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

/// No sign pattern on the recovered factors reproduces the input state.
class SignAssignmentFailure : public std::domain_error {
 public:
  explicit SignAssignmentFailure(const std::string& what)
      : std::domain_error(what) {}
};

/// Mixture weights are negative or do not sum to one.
class InvalidWeights : public std::domain_error {
 public:
  explicit InvalidWeights(const std::string& what) : std::domain_error(what) {}
};

/// A Monte-Carlo estimate was requested with fewer than one trial.
class ZeroTrials : public std::domain_error {
 public:
  ZeroTrials() : std::domain_error("estimate requires at least one trial") {}
};

}  // namespace bellbox
