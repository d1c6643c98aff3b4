#pragma once

#include <stdexcept>
#include <string>

namespace switchopt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configuration value violates its documented invariant.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A solution does not match the dimensionality of its domain or objective.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input data is well-formed but inconsistent (missing legs, bad indexes).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an API precondition (e.g. rendering an empty table).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace switchopt
