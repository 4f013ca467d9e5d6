#pragma once

#include <stdexcept>
#include <string>

namespace rml {

// Bad arguments or preconditions (invalid n, q outside (0,1], ...).
class ParameterError : public std::invalid_argument {
public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failure at runtime: non-convergence, blow-up, degenerate data.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Input violates a structural contract (e.g. matrix not self-adjoint).
class ContractViolation : public std::runtime_error {
public:
  explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rml
