#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, or 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A size guard (vertex cap, enumeration cap) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace xh
