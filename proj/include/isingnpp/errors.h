#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isingnpp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameter values and dimension mismatches.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed instance text. what() is prefixed with "line <k>: ".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Work that would exceed a configured enumeration or memory cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace isingnpp
