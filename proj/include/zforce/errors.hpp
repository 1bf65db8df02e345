#pragma once

#include <stdexcept>
#include <string>

namespace zforce {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pattern symbol was used outside the alphabet that admits it.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Structural violation while building a graph (bad index, multi-edge, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// SGF syntax or semantic error; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// An exact search exceeded its configured node or state budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Numerical routine failed (e.g. the eigensolver did not converge).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace zforce
