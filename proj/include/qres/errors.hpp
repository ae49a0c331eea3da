#pragma once

#include <stdexcept>
#include <string>

namespace qres {

/// Base of every model/data error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON, CSV, LP). Carries the offending line when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A well-formed instance that violates a model invariant.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// An oracle was asked to enumerate more than its guard allows.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qres
