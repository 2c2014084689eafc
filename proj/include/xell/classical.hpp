#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "xell/errors.hpp"
#include "xell/polynomial.hpp"

namespace xell {

/// Generalized Laguerre polynomial L_n^{(alpha)} by the three-term recurrence
///   (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
/// Valid for any real alpha, including the negative values the deformed
/// families need; degree is exactly n (leading coefficient (-1)^n/n!).
inline Polynomial laguerre(int n, double alpha) {
  if (n < 0) return Polynomial::zero();
  Polynomial prev = Polynomial::constant(1.0);
  if (n == 0) return prev;
  Polynomial cur({1.0 + alpha, -1.0});
  for (int k = 1; k < n; ++k) {
    Polynomial next = Polynomial({2.0 * k + 1.0 + alpha, -1.0}) * cur -
                      (k + alpha) * prev;
    next *= 1.0 / (k + 1.0);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace detail {

// Divisor of the step producing P_{k+1}; vanishes only for degenerate
// (alpha, beta) combinations that no validated family reaches.
inline void check_jacobi_step(int k, double alpha, double beta) {
  if (std::abs(k + alpha + beta + 1.0) < 1e-12 ||
      std::abs(2.0 * k + alpha + beta) < 1e-12) {
    throw DegenerateRecurrence(
        "jacobi recurrence degenerates at step " + std::to_string(k + 1) +
        " for alpha=" + std::to_string(alpha) +
        ", beta=" + std::to_string(beta));
  }
}

}  // namespace detail

/// Jacobi polynomial P_n^{(alpha,beta)} by the three-term recurrence
///   2(k+1)(k+a+b+1)(2k+a+b) P_{k+1}
///     = (2k+a+b+1)[(2k+a+b)(2k+a+b+2) x + a^2-b^2] P_k
///       - 2(k+a)(k+b)(2k+a+b+2) P_{k-1}.
/// Accepts any real (alpha, beta) whose intermediate divisors stay nonzero;
/// otherwise throws DegenerateRecurrence.
inline Polynomial jacobi(int n, double alpha, double beta) {
  if (n < 0) return Polynomial::zero();
  Polynomial prev = Polynomial::constant(1.0);
  if (n == 0) return prev;
  Polynomial cur({0.5 * (alpha - beta), 0.5 * (alpha + beta + 2.0)});
  for (int k = 1; k < n; ++k) {
    detail::check_jacobi_step(k, alpha, beta);
    const double t = 2.0 * k + alpha + beta;
    Polynomial next =
        Polynomial({alpha * alpha - beta * beta, t * (t + 2.0)}) * cur *
            (t + 1.0) -
        (2.0 * (k + alpha) * (k + beta) * (t + 2.0)) * prev;
    next *= 1.0 / (2.0 * (k + 1.0) * (k + alpha + beta + 1.0) * t);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Value of L_n^{(alpha)}(x) by running the recurrence on values instead of
/// coefficients. Preferred for large |alpha| or |x|, where the monomial form
/// cancels catastrophically.
inline double laguerre_value(int n, double alpha, double x) {
  if (n < 0) return 0.0;
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next =
        ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Value of P_n^{(alpha,beta)}(x), value recurrence (see laguerre_value).
inline double jacobi_value(int n, double alpha, double beta, double x) {
  if (n < 0) return 0.0;
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 0.5 * ((alpha + beta + 2.0) * x + alpha - beta);
  for (int k = 1; k < n; ++k) {
    detail::check_jacobi_step(k, alpha, beta);
    const double t = 2.0 * k + alpha + beta;
    const double next =
        ((t + 1.0) * ((t + 2.0) * t * x + alpha * alpha - beta * beta) * cur -
         2.0 * (k + alpha) * (k + beta) * (t + 2.0) * prev) /
        (2.0 * (k + 1.0) * (k + alpha + beta + 1.0) * t);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace xell
