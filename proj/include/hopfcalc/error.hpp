#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfcalc {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument: arity mismatch, non-prime modulus, unknown corpus name.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed presentation or substitution text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A computation could not finish within its configured limits.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle cannot run on this input (infinite group, order
/// above the cap, or no confluent system).
class OracleUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfcalc
