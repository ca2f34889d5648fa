#pragma once

#include <stdexcept>
#include <string>

namespace dcp {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument is NaN or infinite.
class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation point too close to a = m (a = 1 physically), where the
// closed forms blow up and the oscillatory quadrature loses its
// alternating structure.
class LightConeProximity : public Error {
 public:
  using Error::Error;
};

// Series acceleration failed to reach the requested tolerance within the
// configured half-period budget.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

// Trace analysis requested on a table with too few rows.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

// Relative observable requested where the normalizing force vanishes.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// File or stream failure while reading or writing tables.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dcp
