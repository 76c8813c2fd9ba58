#pragma once

#include <stdexcept>
#include <string>

namespace weylcoh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A size cap or memory guard was exceeded.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace weylcoh
