#pragma once

#include <stdexcept>
#include <string>

namespace imag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violated a documented precondition or type invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed (non-convergence, non-finite objective, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The operation is only defined for a specific dimension (usually qubits).
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// Malformed state/channel file or spec string.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace imag
