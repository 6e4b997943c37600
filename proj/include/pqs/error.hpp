#pragma once

#include <stdexcept>
#include <string>

namespace pqs {

/// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text.
class ParseError : public Error
{
public:
  ParseError(std::size_t line, const std::string& what)
  : Error("line " + std::to_string(line) + ": " + what), line_(line)
  {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Well-formed input that describes invalid mathematical data.
class ValidationError : public Error
{
public:
  using Error::Error;
};

/// Requested feature outside the supported local models.
class UnsupportedError : public ValidationError
{
public:
  using ValidationError::ValidationError;
};

/// Internal consistency gate failed (non-integral genus or chi, rotation
/// exponent not found, ...). Points at an engine bug or corrupted data.
class InconsistencyError : public Error
{
public:
  using Error::Error;
};

} // namespace pqs
