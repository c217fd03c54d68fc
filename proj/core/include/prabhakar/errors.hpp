#pragma once

#include <stdexcept>
#include <string>

namespace prabhakar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (poles, non-positive steps, bad orders).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument inside the domain but outside the range the evaluator is validated on.
class RangeError : public Error {
 public:
  RangeError(const std::string& what, double bound) : Error(what), bound_(bound) {}
  double bound() const noexcept { return bound_; }

 private:
  double bound_;
};

/// Missing input data, e.g. an operator needing f' on a grid function without one.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Series or quadrature did not reach its tolerance within the hard cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Per-step nonlinear solve failed; carries the last residual.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Numerical Laplace inversion hit a non-finite transform sample.
class InversionError : public Error {
 public:
  using Error::Error;
};

}  // namespace prabhakar
