#pragma once

#include <stdexcept>
#include <string>

namespace zdgame {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape, range or probability violations in caller-supplied data.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The null space of P - I has dimension > 1, so no unique stationary vector.
class NonUniqueStationary : public Error {
 public:
  using Error::Error;
};

// D(p, q, 1) is numerically zero relative to its Hadamard scale.
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

// No point of the scale grid yields a feasible score-pinning strategy.
class NoFeasiblePin : public Error {
 public:
  using Error::Error;
};

// Empirical surplus of the opponent is too close to zero to form a ratio.
class DegenerateRatio : public Error {
 public:
  using Error::Error;
};

// Document could not be parsed as JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Document parsed but does not match the expected schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A numerical postcondition the library guarantees did not hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace zdgame
