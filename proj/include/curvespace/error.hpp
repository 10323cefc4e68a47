#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvespace {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates an operation's precondition (bad spec, nonregular polyline,
// trivial word passed to primitive_root, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Two values built over different surfaces were combined.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

// Textual input could not be parsed. Line and column are 1-based; line 0
// means the input was a single command-line string.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InvalidInput(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    std::string out = "parse error";
    if (line > 0) out += " at line " + std::to_string(line);
    out += (line > 0 ? ", column " : " at column ") + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace curvespace
