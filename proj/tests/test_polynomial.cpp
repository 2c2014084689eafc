#include <catch2/catch.hpp>

#include "xell/polynomial.hpp"

using xell::Polynomial;

TEST_CASE("zero polynomial conventions", "[polynomial]") {
  const Polynomial z = Polynomial::zero();
  CHECK(z.degree() == -1);
  CHECK(z.is_zero());
  CHECK(z(0.0) == 0.0);
  CHECK(z(17.25) == 0.0);
  CHECK(z.derivative().degree() == -1);
}

TEST_CASE("constant evaluation is exact", "[polynomial]") {
  const Polynomial c = Polynomial::constant(3.75);
  CHECK(c.degree() == 0);
  CHECK(c(-123.0) == 3.75);
  CHECK(c(0.0) == 3.75);
}

TEST_CASE("reflection", "[polynomial]") {
  CHECK(Polynomial::constant(1.0).reflected()(5.0) == 1.0);
  const Polynomial x({0.0, 1.0});
  CHECK(x.reflected()(2.0) == -2.0);
  const Polynomial p({1.0, -2.0, 3.0, 4.0});
  const Polynomial r = p.reflected();
  for (double t : {-1.5, 0.25, 2.0}) CHECK(r(t) == Approx(p(-t)).margin(0));
}

TEST_CASE("product of (1+x)(1-x)", "[polynomial]") {
  const Polynomial p = Polynomial({1.0, 1.0}) * Polynomial({1.0, -1.0});
  REQUIRE(p.degree() == 2);
  CHECK(p.coeff(0) == 1.0);
  CHECK(p.coeff(1) == 0.0);
  CHECK(p.coeff(2) == -1.0);
}

TEST_CASE("derivative drops the degree by one", "[polynomial]") {
  const Polynomial p({1.0, 0.0, -1.0});  // 1 - x^2
  const Polynomial d = p.derivative();
  REQUIRE(d.degree() == 1);
  CHECK(d.coeff(0) == 0.0);
  CHECK(d.coeff(1) == -2.0);
  for (int deg = 1; deg <= 9; ++deg) {
    std::vector<double> c(deg + 1, 0.0);
    c[deg] = 1.5;
    c[0] = -0.25;
    CHECK(Polynomial(c).derivative().degree() == deg - 1);
  }
}

TEST_CASE("leading coefficient stays nonzero through arithmetic",
          "[polynomial]") {
  const Polynomial a({1.0, 2.0, 3.0});
  const Polynomial b({4.0, -1.0, 3.0});
  const Polynomial diff = a - b;  // leading terms cancel exactly
  CHECK(diff.degree() == 1);
  CHECK(diff.leading() != 0.0);
  CHECK((a - a).is_zero());
  CHECK((a * 0.0).is_zero());
}

TEST_CASE("arithmetic against pointwise evaluation", "[polynomial]") {
  const Polynomial a({0.5, -1.0, 2.0, 0.75});
  const Polynomial b({-2.0, 3.0, 1.0});
  for (double x : {-2.0, -0.3, 0.0, 0.7, 1.9}) {
    CHECK((a + b)(x) == Approx(a(x) + b(x)).epsilon(1e-14));
    CHECK((a - b)(x) == Approx(a(x) - b(x)).epsilon(1e-14));
    CHECK((a * b)(x) == Approx(a(x) * b(x)).epsilon(1e-14));
    CHECK((2.5 * a)(x) == Approx(2.5 * a(x)).epsilon(1e-14));
  }
}
