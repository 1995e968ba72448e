#pragma once

#include <stdexcept>
#include <string>

namespace rackcolor {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table entry outside {0, ..., n-1}, or a table of the wrong shape.
class MalformedTable : public Error {
 public:
  MalformedTable(const std::string& what, int row, int column)
      : Error(what), row_(row), column_(column) {}
  int row() const noexcept { return row_; }
  int column() const noexcept { return column_; }

 private:
  int row_;
  int column_;
};

/// An operation that needs the rack axioms got a table that fails them.
class NotARack : public Error {
 public:
  using Error::Error;
};

/// Syntax errors in the line-oriented file formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A presentation, coloring, numbering or schema that violates its invariants.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant failed at runtime; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rackcolor
