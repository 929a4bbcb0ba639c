#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zpdisc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on p or precision, or a value is out of range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A request needs more base-p digits than a value carries.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or table would exceed its size cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The geometric ratio of a linear Weyl sum equals 1.
class DegenerateRatioError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace zpdisc
