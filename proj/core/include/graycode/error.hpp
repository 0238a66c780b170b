#pragma once

#include <stdexcept>
#include <string>

namespace graycode {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on parameters or inputs was violated (wrong shape, out of range, malformed spec).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested object provably does not exist (parity obstructions and the like).
/// Messages name the violated existence condition.
class NonexistenceError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A bounded search ran out of budget before reaching a verdict.
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace graycode
