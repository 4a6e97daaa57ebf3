#pragma once

#include <stdexcept>
#include <string>

namespace minv {

/// Anything wrong with user-supplied data: syntax, dimensions, limits, domains.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, int line, int column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

/// Evaluation outside the real domain of a monomial or logarithm.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// Requested bounds exceed the fixed search limits.
class LimitError : public InputError {
 public:
  using InputError::InputError;
};

/// A trajectory left the finite floating-point range.
class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state the invariants rule out; reaching one is a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minv
