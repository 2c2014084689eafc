#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "xell/errors.hpp"
#include "xell/tridiag.hpp"

namespace xell {

/// Gauss rule for a classical base weight; exact on polynomials of degree
/// <= 2*order - 1 against that weight.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;

  template <typename F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (int i = 0; i < order; ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

namespace detail {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix built from
// the monic recurrence coefficients, weights mu0 * (first eigenvector
// component)^2.
inline QuadratureRule golub_welsch(const std::vector<double>& a,
                                   const std::vector<double>& sqrt_b,
                                   double mu0) {
  const auto eig = tridiag::eigen_first_row(a, sqrt_b);
  QuadratureRule rule;
  rule.order = static_cast<int>(a.size());
  rule.nodes = eig.values;
  rule.weights.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    rule.weights[i] =
        mu0 * eig.first_components[i] * eig.first_components[i];
  return rule;
}

}  // namespace detail

/// Weight x^alpha e^{-x} on (0, inf); needs alpha > -1.
inline QuadratureRule gauss_laguerre_rule(int n, double alpha) {
  if (n < 1) throw InvalidWeightParams("gauss_laguerre_rule: need N >= 1");
  if (!(alpha > -1.0))
    throw InvalidWeightParams("gauss_laguerre_rule: need alpha > -1");
  std::vector<double> a(n), sb(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) a[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < n; ++k) sb[k - 1] = std::sqrt(k * (k + alpha));
  return detail::golub_welsch(a, sb, std::tgamma(alpha + 1.0));
}

/// Weight (1-x)^alpha (1+x)^beta on (-1, 1); needs alpha, beta > -1.
inline QuadratureRule gauss_jacobi_rule(int n, double alpha, double beta) {
  if (n < 1) throw InvalidWeightParams("gauss_jacobi_rule: need N >= 1");
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw InvalidWeightParams("gauss_jacobi_rule: need alpha, beta > -1");
  const double ab = alpha + beta;
  std::vector<double> a(n), sb(n > 1 ? n - 1 : 0);
  a[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + ab;
    a[k] = (beta * beta - alpha * alpha) / (t * (t + 2.0));
  }
  if (n > 1)
    sb[0] = std::sqrt(4.0 * (alpha + 1.0) * (beta + 1.0) /
                      ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
  for (int k = 2; k < n; ++k) {
    const double t = 2.0 * k + ab;
    sb[k - 1] = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                          (t * t * (t + 1.0) * (t - 1.0)));
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) +
                              std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) -
                              std::lgamma(ab + 2.0));
  return detail::golub_welsch(a, sb, mu0);
}

}  // namespace xell
