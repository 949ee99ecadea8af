#ifndef ASIANOP_ERRORS_HPP
#define ASIANOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asianop {

// Base class for every failure this library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the supported domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument at (or within machine tolerance of) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Argument on a branch cut of the principal logarithm.
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Asymptotic expansion requested outside its validity wedge.
class WedgeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A series did not converge within the permitted number of terms.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// An intermediate exponential would overflow double precision.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Exponent bookkeeping in the pricing formulas would still overflow.
class OverflowGuardError : public OverflowError {
 public:
  using OverflowError::OverflowError;
};

// Quadrature failed to reach the requested tolerance.
class QuadError : public Error {
 public:
  using Error::Error;
};

// Integrand returned a non-finite value.
class EvalError : public QuadError {
 public:
  using QuadError::QuadError;
};

// Tail truncation point not found within the search budget.
class TailError : public QuadError {
 public:
  using QuadError::QuadError;
};

// Normalized time to maturity below the oscillation floor of the
// trigonometric-hyperbolic integrands.
class OscillationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Normalized strike below the q >= 1e-4 floor of the q > 0 branch.
class SmallQError : public DomainError {
 public:
  using DomainError::DomainError;
};

// nu within machine tolerance of -1 in the q > 0 branch.
class NuPoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Laplace transform evaluated too close to one of its two poles.
class PoleProximityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Frozen strike a = q(h) not positive; that regime belongs to the
// rigid closed form.
class NonpositiveStrikeError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace asianop

#endif  // ASIANOP_ERRORS_HPP
