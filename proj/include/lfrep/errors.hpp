#pragma once

#include <stdexcept>
#include <string>

namespace lfrep {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments: unknown edge ids, malformed filtrations, bad ranks, etc.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration or table would exceed its configured size limit.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Text input that does not follow the documented grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Two independent computations disagreed, or an exactness assertion
/// (divisibility, integrality) failed. Always signals a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lfrep
