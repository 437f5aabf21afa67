#pragma once

#include <stdexcept>
#include <string>

namespace padic {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input could not be parsed (CLI exit 2).
struct ParseError : Error {
  using Error::Error;
};

// Operands belong to incompatible towers.
struct TowerMismatch : Error {
  using Error::Error;
};

// Series shapes or matrix dimensions do not line up.
struct DimensionMismatch : Error {
  using Error::Error;
};

// The operand is indistinguishable from zero at its precision.
struct ZeroAtPrecision : Error {
  using Error::Error;
};

// Argument lies outside the convergence domain of a series (CLI exit 3).
struct DomainError : Error {
  using Error::Error;
};

// The inner binomial p-th root of the staged extended exponential is outside
// its convergence domain; the stage-1 obstruction.
struct RootDomainError : DomainError {
  using DomainError::DomainError;
};

// Evaluation point falls outside the closed unit polydisc.
struct OutOfBall : Error {
  using Error::Error;
};

// The correspondence matrix is not invertible at working precision (exit 4).
struct SingularConfig : Error {
  using Error::Error;
};

// A smallness threshold (alpha, 2*beta, or their relation) is violated (exit 4).
struct SmallnessViolation : Error {
  using Error::Error;
};

}  // namespace padic
