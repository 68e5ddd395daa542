#pragma once

#include <stdexcept>
#include <string>

namespace iterlab {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of morphisms or carriers do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Malformed literal, monad string or law name.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The value space of a monad cannot be enumerated; sampled mode is required.
class NotEnumerable : public Error {
 public:
  using Error::Error;
};

// A law or operation needs structure (order, semilattice) the instance lacks.
class Inapplicable : public Error {
 public:
  using Error::Error;
};

// Fixpoint iteration did not settle within its cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Exhaustive enumeration would exceed the configured case budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A monad transformer precondition was checked and found violated.
class TransformRejected : public Error {
 public:
  using Error::Error;
};

}  // namespace iterlab
