#pragma once

#include <stdexcept>
#include <string>

namespace ptsusy {

// Rejected input: bad parameters, violated preconditions. The CLI maps these
// to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation ran but produced something unusable. Exit code 1.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPositiveInput : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class MatchingConditionViolated : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class EnergyMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class GridMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class AsymmetricGrid : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DegenerateTransferMatrix : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace ptsusy
