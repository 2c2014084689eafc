#pragma once

#include <stdexcept>

namespace xell {

// Base type for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coupling constants violate a family constraint (g > 0, h > g > 0, ...).
struct InvalidParams : Error {
  using Error::Error;
};

// A three-term recurrence divisor vanished; the requested (n, alpha, beta)
// does not define the polynomial.
struct DegenerateRecurrence : Error {
  using Error::Error;
};

// A mixing-coefficient divisor vanished. Unreachable for validated params.
struct ZeroDenominator : Error {
  using Error::Error;
};

// Evaluation point outside the physical domain.
struct DomainError : Error {
  using Error::Error;
};

// The deforming polynomial vanished at an evaluation point.
struct SingularXi : Error {
  using Error::Error;
};

// Quadrature base-weight exponents out of range (need alpha, beta > -1).
struct InvalidWeightParams : Error {
  using Error::Error;
};

// Node-doubling did not settle within the node cap.
struct NoConvergence : Error {
  using Error::Error;
};

// Finite-difference grid failed the refinement certification.
struct GridTooCoarse : Error {
  using Error::Error;
};

}  // namespace xell
