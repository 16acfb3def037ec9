#pragma once

#include <stdexcept>
#include <string>

namespace sandwich {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point or function lies outside the domain an operation works on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter is out of range (λ ≤ 0, tol not a power of 1/2, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The inputs violate an operation's mathematical precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A postcondition failed or a schedule cap was hit on valid input. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sandwich
