#pragma once

#include <stdexcept>
#include <string>

namespace zbhyp {

// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A requested constant or series does not converge (e.g. zeta(1)).
class divergence_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// A series or iteration hit its cap without meeting its stopping rule.
class non_convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied precondition (grid size, parameter range, config) failed.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite-difference probe asked to resolve below its step resolution.
class step_underflow_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

}  // namespace zbhyp
