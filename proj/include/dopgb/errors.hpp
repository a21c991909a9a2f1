#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dopgb {

/// Operands live in rings of different dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exponent entry left the configured range.
class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Leading data was requested for the zero element.
class NoLeadingTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input violates an operation's precondition (e.g. a vector that is not a syzygy).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A syzygy strategy was requested for a basis it does not apply to.
class StrategyInapplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A completion loop or subset enumeration exceeded its configured cap.
class ComputationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A post-condition re-check failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dopgb
