#pragma once

#include <stdexcept>
#include <string>

namespace wiener {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite samples, out-of-range parameters, malformed input data.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// A scalar/vector/tensor operand was passed where another rank is required.
class RankMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold (e.g. a field that must be
/// divergence-free is not).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Adding quantities of different physical dimension.
class UnitsError : public Error {
 public:
  using Error::Error;
};

}  // namespace wiener
