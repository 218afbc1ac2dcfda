#pragma once

#include <stdexcept>
#include <string>

namespace ucf {

// Precondition or input violation reported by a library operation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed family or poset text. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An exhaustive search was asked to go beyond its configured resource bound.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ucf
