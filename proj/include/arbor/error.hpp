#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arbor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A value violates the structural invariants of its type.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A precondition on sizes or buffers is not met (oracle bounds, truncation buffers).
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised when an internally produced witness fails verification. Never expected.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace arbor
