#pragma once

#include <stdexcept>
#include <string>

namespace qpflow {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the shape or value of an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two values that must live in the same number field do not.
class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different number fields") {}
  using Error::Error;
};

// A brute-force search would exceed its configured work bound.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qpflow
