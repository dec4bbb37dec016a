#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oscnum {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the range covered by a table or data set.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition was violated. `bound()` carries the threshold
// that was not met (for example the primorial a sieved sum requires).
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::uint64_t bound)
      : Error(what), bound_(bound) {}
  std::uint64_t bound() const noexcept { return bound_; }

 private:
  std::uint64_t bound_;
};

// Allocation of a large table failed.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Malformed input data (files, numeric literals).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace oscnum
