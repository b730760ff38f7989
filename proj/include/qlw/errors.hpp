#pragma once

#include <stdexcept>
#include <string>

namespace qlw {

// Base class for all typed failures raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller passed a value outside an operation's stated domain.
struct DomainError : Error {
  using Error::Error;
};

// Operation is not defined for this object (e.g. full nonlinearity on a
// linearized-only metric).
struct UnsupportedError : Error {
  using Error::Error;
};

// An iterative numerical procedure failed to reach its tolerance.  Carries
// what was achieved so callers can report diagnostics.
struct NumericalError : Error {
  double achieved = 0.0;
  double location = 0.0;
  NumericalError(const std::string& msg, double achieved_, double location_ = 0.0)
      : Error(msg), achieved(achieved_), location(location_) {}
};

// An inter-module contract was violated (mismatched grids, field supported
// where it must vanish, ...).
struct ContractViolation : Error {
  using Error::Error;
};

// Scenario file problems: parse errors and constraint violations.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace qlw
