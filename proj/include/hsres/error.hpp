#pragma once

#include <stdexcept>
#include <string>

namespace hsres {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands with incompatible or oversized dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix that fails the invariants of the type it is being wrapped in.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Too much probability mass lies above the Fock cutoff.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// The iterative eigensolver did not converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hsres
