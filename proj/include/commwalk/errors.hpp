#pragma once

#include <stdexcept>
#include <string>

namespace commwalk {

/// Bad caller input: malformed files, out-of-range ids, violated preconditions.
/// The CLI maps this to exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An algorithm could not produce a result (e.g. eigen-solver non-convergence).
/// The CLI maps this to exit code 2.
class AlgorithmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public AlgorithmError {
 public:
  ConvergenceError(const std::string& what, double gap_estimate)
      : AlgorithmError(what), gap_estimate_(gap_estimate) {}

  /// Best estimate of |lambda2 - lambda3| at the point of failure.
  double gap_estimate() const noexcept { return gap_estimate_; }

 private:
  double gap_estimate_;
};

}  // namespace commwalk
