#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobforge {

// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates a mathematical precondition (inverse of zero, non-prime
// characteristic, zero ring, element outside the maximal ideal).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Shapes or rings do not fit together, or a complex fails d*d = 0.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A configured ceiling was hit (S-pair count, pushforward size, exponent
// overflow).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagree, or a verified statement failed.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace frobforge
