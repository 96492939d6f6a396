#pragma once

#include <stdexcept>
#include <string>

namespace cavlab {

// Violation of a documented precondition or invariant (bad shapes, non-finite
// values, insufficient data, malformed config). The CLI maps these to exit
// code 2; everything else derived from std::exception maps to exit code 1.
class ContractViolation : public std::runtime_error {
 public:
  explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

// Training produced a non-finite loss or gradient.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cavlab
