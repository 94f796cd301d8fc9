#pragma once

#include <stdexcept>
#include <string>

namespace qi {

// Malformed input: unknown labels, bad JSON structure, wrong matrix shapes in files.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold (odd pfaffian size,
// non-composable word, invalid group/size combination, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact arithmetic failure: division by zero, singular matrix, inexact integer division.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qi
