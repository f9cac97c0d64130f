#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freiman {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// An operation was called outside its domain (dimension mismatch,
/// non-quasi-equigenerated ideal, edgeless graph, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configurable resource guard tripped (set size, cycle count, forest
/// count). Results are never silently truncated.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Fixed-width integer arithmetic overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace freiman
