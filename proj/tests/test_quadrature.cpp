#include <catch2/catch.hpp>

#include <cmath>

#include "oracles.hpp"
#include "xell/quadrature.hpp"

using namespace xell;

namespace {
constexpr double kPiT = 3.14159265358979323846;
}

TEST_CASE("gauss-laguerre frozen rules", "[quadrature]") {
  // alpha = 0, N = 1: node 1, weight 1
  const QuadratureRule r1 = gauss_laguerre_rule(1, 0.0);
  REQUIRE(r1.order == 1);
  CHECK(r1.nodes[0] == Approx(1.0).margin(1e-13));
  CHECK(r1.weights[0] == Approx(1.0).margin(1e-13));

  // int e^{-x} x^3 dx = Gamma(4) = 6, exact with N = 2
  const QuadratureRule r2 = gauss_laguerre_rule(2, 0.0);
  CHECK(r2.integrate([](double x) { return x * x * x; }) ==
        Approx(6.0).epsilon(1e-13));
}

TEST_CASE("gauss-jacobi frozen rules", "[quadrature]") {
  // alpha = beta = 0, N = 2: Gauss-Legendre +-1/sqrt(3) with weights 1
  const QuadratureRule r = gauss_jacobi_rule(2, 0.0, 0.0);
  REQUIRE(r.order == 2);
  CHECK(r.nodes[0] == Approx(-1.0 / std::sqrt(3.0)).margin(1e-14));
  CHECK(r.nodes[1] == Approx(1.0 / std::sqrt(3.0)).margin(1e-14));
  CHECK(r.weights[0] == Approx(1.0).margin(1e-13));
  CHECK(r.weights[1] == Approx(1.0).margin(1e-13));
}

TEST_CASE("rules are exact to degree 2N-1", "[quadrature]") {
  for (double alpha : {0.0, 0.5, 2.7}) {
    for (int n : {1, 2, 4, 7}) {
      const QuadratureRule rule = gauss_laguerre_rule(n, alpha);
      for (double w : rule.weights) CHECK(w > 0.0);
      for (int k = 0; k <= 2 * n - 1; ++k) {
        const double exact = oracle::laguerre_moment(k, alpha);
        const double got =
            rule.integrate([k](double x) { return std::pow(x, k); });
        CHECK(got == Approx(exact).epsilon(1e-12));
      }
    }
  }
  for (auto [alpha, beta] : {std::pair{0.0, 0.0}, std::pair{0.5, 1.5},
                             std::pair{2.5, -0.5}}) {
    for (int n : {1, 2, 5, 8}) {
      const QuadratureRule rule = gauss_jacobi_rule(n, alpha, beta);
      for (double w : rule.weights) CHECK(w > 0.0);
      for (int k = 0; k <= 2 * n - 1; ++k) {
        const double exact = oracle::jacobi_moment(k, alpha, beta);
        const double got =
            rule.integrate([k](double x) { return std::pow(x, k); });
        CHECK(got == Approx(exact).margin(1e-12 * oracle::jacobi_moment(
                                                      0, alpha, beta)));
      }
    }
  }
}

TEST_CASE("weight parameters are validated", "[quadrature]") {
  CHECK_THROWS_AS(gauss_laguerre_rule(4, -1.0), InvalidWeightParams);
  CHECK_THROWS_AS(gauss_laguerre_rule(0, 0.5), InvalidWeightParams);
  CHECK_THROWS_AS(gauss_jacobi_rule(4, 0.5, -1.2), InvalidWeightParams);
  CHECK_THROWS_AS(gauss_jacobi_rule(4, -3.0, 0.5), InvalidWeightParams);
}

TEST_CASE("sturm bisection matches QL on a small matrix", "[quadrature]") {
  // 5x5 symmetric tridiagonal with known structure
  const std::vector<double> d = {2.0, 2.0, 2.0, 2.0, 2.0};
  const std::vector<double> e = {-1.0, -1.0, -1.0, -1.0};
  const auto ql = tridiag::eigen_first_row(d, e);
  const auto low = tridiag::lowest_eigenvalues(d, e, 3, 1e-12);
  for (int i = 0; i < 3; ++i)
    CHECK(low[i] == Approx(ql.values[i]).margin(1e-10));
  // eigenvalues of tridiag(-1,2,-1) are 2 - 2 cos(k pi / 6)
  for (int k = 1; k <= 5; ++k)
    CHECK(ql.values[k - 1] ==
          Approx(2.0 - 2.0 * std::cos(k * kPiT / 6.0)).margin(1e-12));
}
