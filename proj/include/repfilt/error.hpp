#pragma once

#include <stdexcept>
#include <string>

namespace repfilt {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input: group specs, system files, flags.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A size bound was exceeded (group order, poset size, ...).
class BoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace repfilt
