#pragma once

#include <stdexcept>
#include <string>

namespace kinv {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (PD codes, cycle notation, group files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but violates a structural invariant.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computation could not be carried out (limits, non-exact division, ...).
class ComputeError : public Error {
 public:
  using Error::Error;
};

}  // namespace kinv
