#pragma once

#include <stdexcept>

namespace araki {

// Base class of every toolkit error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Square/size mismatch between matrix operands.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Length mismatch between eigenvalue vectors.
struct ShapeMismatch : Error {
  using Error::Error;
};

// The eigensolver did not reach its accuracy target.
struct NonConvergence : Error {
  using Error::Error;
};

// A scalar function was evaluated outside its domain,
// or an operand failed a structural precondition.
struct DomainError : Error {
  using Error::Error;
};

// Negative matrix power requested for a singular (non-PD) matrix.
struct SingularPower : Error {
  using Error::Error;
};

// Matrix logarithm requested for a singular (non-PD) matrix.
struct SingularLog : Error {
  using Error::Error;
};

// An inequality hypothesis failed its validator; flags a bad test
// case, not a counterexample.
struct HypothesisViolated : Error {
  using Error::Error;
};

// A sweep state file failed its checksum or binding checks.
struct CorruptState : Error {
  using Error::Error;
};

// File read/write failure.
struct IoError : Error {
  using Error::Error;
};

}  // namespace araki
