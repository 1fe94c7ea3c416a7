#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hecke {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Operands live in different fields, algebras or strand counts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (index out of range, bad degree, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested operation is not offered over the active field.
class UnsupportedField : public Error {
 public:
  using Error::Error;
};

/// A mathematical guarantee failed at runtime; always a bug, never user error.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hecke
