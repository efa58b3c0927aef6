#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paramat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `position()` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Structurally invalid matrix, or a matrix document that violates the schema.
class MatrixError : public Error {
 public:
  using Error::Error;
};

/// Evaluation against a valuation that does not cover the formula.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Premise set larger than the configured subset bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// Violated operation precondition not covered by the classes above.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace paramat
