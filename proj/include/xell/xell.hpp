#pragma once

// Umbrella header: exceptional (X_ell) Laguerre/Jacobi polynomials, their
// shape-invariant deformed potentials, and the numerical verification
// harness.

#include "xell/battery.hpp"
#include "xell/classical.hpp"
#include "xell/errors.hpp"
#include "xell/families.hpp"
#include "xell/polynomial.hpp"
#include "xell/quadrature.hpp"
#include "xell/schrodinger.hpp"
#include "xell/tridiag.hpp"
#include "xell/verify.hpp"
