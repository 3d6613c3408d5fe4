#pragma once

#include <stdexcept>
#include <string>

namespace jnrange {

// Operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates a value-level precondition (non-Hermitian, not unit, out-of-range parameter).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A verification routine was asked to test a statement outside its hypothesis.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed JSON or CSV input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jnrange
