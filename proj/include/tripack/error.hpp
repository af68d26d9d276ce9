#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tripack {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller handed an operation input that violates its documented contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The graph is structurally invalid (not a simple tripartite graph).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// No part of the graph has both incident sides complete.
class NotBilaterallyComplete : public Error {
 public:
  NotBilaterallyComplete()
      : Error("graph is not bilaterally-complete: no part has both incident sides complete") {}
};

/// An exact oracle refused an instance larger than its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal self-check failed. Indicates a bug, never expected.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind { Syntax, Semantic };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(format(kind, line, column, message)), kind_(kind), line_(line), column_(column) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(Kind kind, std::size_t line, std::size_t column,
                            const std::string& message) {
    std::string out = kind == Kind::Syntax ? "syntax error" : "semantic error";
    if (line > 0) {
      out += " at " + std::to_string(line) + ":" + std::to_string(column);
    }
    return out + ": " + message;
  }

  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tripack
