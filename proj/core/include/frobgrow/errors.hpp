#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobgrow {

/// Malformed or inconsistent user input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parse failure with a 1-based column (and line, when reading files).
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t column, std::size_t line = 0)
      : InputError(format(what, column, line)), column_(column), line_(line) {}

  std::size_t column() const { return column_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(const std::string& what, std::size_t column, std::size_t line) {
    std::string where = line ? "line " + std::to_string(line) + ", " : std::string();
    return where + "column " + std::to_string(column) + ": " + what;
  }

  std::size_t column_;
  std::size_t line_;
};

/// Operands live over different prime fields or different rings.
class ModulusMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A configured resource budget ran out. Never a wrong answer; exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical check failed (exit code 1). Carries the witness in what().
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace frobgrow
