#pragma once

#include <stdexcept>
#include <string>

namespace ciore {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (ill-formed formula, bad schema, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed by the formula / sequent / JSON readers.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (atom count, search budget) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ciore
