#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rzlab {

// Base class for every error raised by the library. The C API maps the
// concrete subclass onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `position` is the 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A mathematical precondition of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A numeric procedure failed to converge.
class NumericError : public Error {
 public:
  NumericError(const std::string& message, double worst_residual)
      : Error(message), worst_residual_(worst_residual) {}

  double worst_residual() const noexcept { return worst_residual_; }

 private:
  double worst_residual_;
};

}  // namespace rzlab
