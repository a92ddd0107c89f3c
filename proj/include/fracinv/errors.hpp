#pragma once

#include <stdexcept>
#include <string>

namespace fracinv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// argument outside the domain of a weight or operator
struct DomainError : Error {
  using Error::Error;
};

struct ParameterError : Error {
  using Error::Error;
};

// three-term recurrence cannot proceed: division by a vanishing pivot
struct PivotError : ParameterError {
  PivotError(int step, const std::string& what)
      : ParameterError("recurrence pivot vanishes at step " + std::to_string(step) + ": " + what),
        step(step) {}
  int step;
};

struct AccuracyError : Error {
  AccuracyError(const std::string& what, double bound)
      : Error(what + " (bound " + std::to_string(bound) + ")"), bound(bound) {}
  double bound;
};

struct PreconditionError : Error {
  using Error::Error;
};

// an exact computation produced something it never should; engine bug
struct ConsistencyError : Error {
  using Error::Error;
};

struct ContractError : Error {
  using Error::Error;
};

struct NumericError : Error {
  using Error::Error;
};

}  // namespace fracinv
