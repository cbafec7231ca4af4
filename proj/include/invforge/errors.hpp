#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invforge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Division by zero or inversion of a zero element.
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// An operation was called outside its domain (wrong field kind, size mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or closure hit its configured size bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace invforge
