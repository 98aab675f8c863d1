#pragma once

#include <stdexcept>
#include <string>

namespace trajkit {

/// Invalid flag combinations or argument values. CLI exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed, inconsistent, or out-of-domain input data. CLI exit code 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure with the 1-based line it occurred on.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, int line)
      : DataError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A measure was requested on a dataset kind it does not apply to,
/// or a required parameter is missing. CLI exit code 3.
class ConfigError : public DataError {
 public:
  using DataError::DataError;
};

/// Input exceeds a complexity guard of a deliberately small-scale
/// algorithm. CLI exit code 4.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trajkit
