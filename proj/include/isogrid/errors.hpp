#pragma once

#include <stdexcept>
#include <string>

namespace isogrid {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed arguments outside an operation's domain (bad dims, duplicate
// points, unknown theorem id, table too short, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic would leave the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A size cap was hit (brute-force oracle, exact constellation search).
class ResourceRefused : public Error {
 public:
  using Error::Error;
};

// A closed form was requested outside the range where it is proven.
class OutOfRegime : public Error {
 public:
  using Error::Error;
};

// A sequence does not satisfy the expected recurrence: the numerator
// reconstructed from it has a nonzero coefficient past its degree bound.
class RecurrenceTailError : public Error {
 public:
  RecurrenceTailError(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace isogrid
