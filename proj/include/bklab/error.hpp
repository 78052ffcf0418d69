#pragma once

#include <stdexcept>
#include <string>

namespace bklab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when raw input does not describe a valid hypergraph.
class InvalidHypergraph : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation is called outside its domain (edge too small, bad k, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised when an exhaustive procedure would exceed its configured size limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed .hg / JSON text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bklab
