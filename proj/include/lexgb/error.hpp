#pragma once

#include <stdexcept>
#include <string>

namespace lexgb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised when leading data is requested from the zero polynomial.
class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& what)
      : Error("zero polynomial has no " + what) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class NotZeroDimensional : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input that could not be understood. `position` is a byte
/// offset into the text, or npos when it does not apply.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = std::string::npos)
      : Error(position == std::string::npos
                  ? what
                  : what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lexgb
