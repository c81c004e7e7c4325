#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affgebra {

// Operands built over different variable contexts.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ranks, base dimensions or arities that do not line up.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structure data that violates a precondition (broken Jacobi, non-cocycle, ...).
class InvalidStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Anchor extraction of a coboundary found coefficients that do not assemble
// into a single vector field: the input cochain was not a multi-quasi-derivation.
class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        message_(message),
        offset_(offset) {}

  const std::string& message() const { return message_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string message_;
  std::size_t offset_;
};

}  // namespace affgebra
