#pragma once

#include <stdexcept>
#include <string>

namespace rblab {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the operation's domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An input violates a structural precondition (e.g. a non-nested system).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A size guard refused to run an exhaustive computation.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace rblab
