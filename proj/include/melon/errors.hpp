#pragma once

#include <stdexcept>
#include <string>

namespace melon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact division left a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// A geometric point has repeated exponents (or a Binet-Cauchy entry has a
/// vanishing denominator).
class DegeneratePoint : public Error {
 public:
  using Error::Error;
};

/// Dropping trailing variables whose partition parts are not zero.
class NonzeroTail : public Error {
 public:
  using Error::Error;
};

/// A plane partition does not fit the requested box.
class BoxMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An invariant that holds for all valid input was found broken.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace melon
