#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resint {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different generator specs or rings.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// Series inversion of a class whose constant term is not 1.
class NonUnitError : public Error {
 public:
  using Error::Error;
};

class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// s_{-rank}(E) was requested directly; it only exists paired with c_top(E).
class CancellationRequired : public Error {
 public:
  using Error::Error;
};

class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. line/column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0 && column == 0) return what;
    std::string pos = "line " + std::to_string(line);
    if (column != 0) pos += ", column " + std::to_string(column);
    return pos + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace resint
