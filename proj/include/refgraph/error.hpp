#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace refgraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, or 0 when the error is not tied
/// to a line (e.g. a bare signature string).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Raised when a rank correlation is undefined for the given series.
class CorrelationError : public Error {
 public:
  using Error::Error;
};

}  // namespace refgraph
