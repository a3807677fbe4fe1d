#pragma once

#include <stdexcept>
#include <string>

namespace finsler::algebra {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public AlgebraError {
 public:
  DivisionByZero() : AlgebraError("division by the zero rational function") {}
};

/// The denominator vanishes at the requested evaluation point.
class PoleError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Input was expected to be polynomial in a symbol but has it in the denominator.
class NotPolynomial : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class ParseError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace finsler::algebra
