#pragma once

#include <stdexcept>
#include <string>

namespace usm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition (CLI exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded (CLI exit code 3). Never means "infinite".
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (CLI exit code 4).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace usm
