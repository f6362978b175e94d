#pragma once

#include <stdexcept>
#include <string>

namespace ptqao {

// Exact division by zero; most often λ=0 substituted into a λ^{-k} term.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class TruncationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AmbiguousSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ResidualError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegativeLambdaError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Eigensolver or fixed-point iteration failed to converge.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ptqao
