#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scator {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A required denominator (usually a scalar component) vanished.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested the inverse of an element with zero modulus.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Multivector does not lie in the embedded image.
class NotInImage : public Error {
 public:
  using Error::Error;
};

/// Expression is structurally valid but badly typed for the requested operation.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// Bad command-line usage (flag combinations, ranges, malformed values).
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string const& message, std::size_t offset, std::string expected)
      : Error(message + " at offset " + std::to_string(offset) + " (expected " + expected + ")"),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  std::string const& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace scator
