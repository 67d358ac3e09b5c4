#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax or validation failure in formula/network/DIMACS text. Line and
// column are 1-based; 0 means the location is the input as a whole.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// A network violating its structural invariants.
class InvalidNetwork : public Error {
 public:
  using Error::Error;
};

// Evaluation with an assignment that does not cover the formula.
class EvalError : public Error {
 public:
  using Error::Error;
};

// A configured size cap (variable count, state bits, enumeration guard) was
// exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace bcn
