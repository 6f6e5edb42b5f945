#ifndef ALC_ERROR_HPP
#define ALC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace alc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-side contract was broken (non-NNF input, unassigned individual, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Oracle configuration does not cover the names of the ABox.
class OracleCoverageError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Enumeration would exceed the configured ceiling.
class OracleCeilingExceeded : public Error {
 public:
  using Error::Error;
};

class StepLimitExceeded : public Error {
 public:
  using Error::Error;
};

// Internal invariant broken during a run (e.g. no progress after a rule application).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class MeasureDecreaseViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace alc

#endif  // ALC_ERROR_HPP
