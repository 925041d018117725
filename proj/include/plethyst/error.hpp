#pragma once

#include <stdexcept>
#include <string>

namespace plethyst {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input exceeds a configured size cap (partition size, degree, length).
class BoundError : public Error {
 public:
  using Error::Error;
};

// Two operands that must agree in size, degree or shape do not.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// Malformed text or a value that violates a type invariant.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A basis conversion or operation that this module does not own.
class BasisError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug, never bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace plethyst
