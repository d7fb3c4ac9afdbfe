#pragma once

#include <stdexcept>
#include <string>

namespace l1f {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violation: wrong parity, invalid parameter, value out of range.
struct DomainError : Error {
  using Error::Error;
};

// Arithmetic between elements of different conductors without an explicit lift.
struct ConductorMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// Input whose period sum is nonzero: L(1,f) does not exist.
struct DivergentSeries : Error {
  using Error::Error;
};

// Malformed or invalid input document.
struct ParseError : Error {
  using Error::Error;
};

// Broken internal invariant, e.g. an exact/numeric disagreement. Always a bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace l1f
