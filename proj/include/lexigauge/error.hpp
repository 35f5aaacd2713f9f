#ifndef LEXIGAUGE_ERROR_HPP
#define LEXIGAUGE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexigauge {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the 1-based record (row) number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t row)
      : Error(what + " (row " + std::to_string(row) + ")"), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the value domain of an argument was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SizeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input has zero spread where the computation needs some.
class DegenerateInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexigauge

#endif  // LEXIGAUGE_ERROR_HPP
