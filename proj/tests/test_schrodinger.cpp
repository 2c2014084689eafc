#include <catch2/catch.hpp>

#include <cmath>
#include <future>

#include "oracles.hpp"
#include "xell/schrodinger.hpp"

using namespace xell;

TEST_CASE("sinusoidal coordinate", "[schrodinger]") {
  CHECK(eta(Kind::Laguerre, 3.0) == 9.0);
  CHECK(eta(Kind::Jacobi, 0.25 * kPi) == Approx(0.0).margin(1e-15));
  CHECK(eta(Kind::Jacobi, 0.0) == 1.0);
  CHECK(eta_derivs(Kind::Laguerre, 3.0).d1 == 6.0);
  CHECK(eta_derivs(Kind::Laguerre, 3.0).d2 == 2.0);
  CHECK(eta_derivs(Kind::Jacobi, 0.25 * kPi).d1 == Approx(-2.0).margin(1e-14));
  CHECK(eta_derivs(Kind::Jacobi, 0.25 * kPi).d2 == Approx(0.0).margin(1e-14));
  CHECK_THROWS_AS(eta(Kind::Laguerre, -0.1), DomainError);
  CHECK_THROWS_AS(eta(Kind::Jacobi, 1.7), DomainError);
}

TEST_CASE("undeformed prepotential", "[schrodinger]") {
  const W0 l = w0(Kind::Laguerre, 1.0, ParamSet::laguerre(2.0));
  CHECK(l.value == Approx(-0.5).margin(1e-14));
  CHECK(l.d1 == Approx(1.0).margin(1e-14));
  CHECK(l.d2 == Approx(-3.0).margin(1e-14));

  const W0 j = w0(Kind::Jacobi, 0.25 * kPi, ParamSet::jacobi(1.0, 1.0));
  CHECK(j.value == Approx(std::log(0.5)).margin(1e-14));

  CHECK_THROWS_AS(w0(Kind::Laguerre, 0.0, ParamSet::laguerre(1.0)),
                  DomainError);
  CHECK_THROWS_AS(w0(Kind::Jacobi, 0.5 * kPi, ParamSet::jacobi(1.0, 2.0)),
                  DomainError);
}

TEST_CASE("deformed prepotential reduces to w0 at ell=0", "[schrodinger]") {
  const System sl(SystemSpec(Family::L1, 0, ParamSet::laguerre(1.7)));
  const System sj(SystemSpec(Family::J1, 0, ParamSet::jacobi(1.2, 2.1)));
  for (double x : {0.3, 0.8, 1.4}) {
    const auto dl = sl.w_derivs(x);
    const W0 bl = w0(Kind::Laguerre, x, ParamSet::laguerre(1.7));
    CHECK(dl.w == Approx(bl.value).margin(1e-15));
    CHECK(dl.dw == Approx(bl.d1).margin(1e-15));
    CHECK(dl.d2w == Approx(bl.d2).margin(1e-15));
    const auto dj = sj.w_derivs(x);
    const W0 bj = w0(Kind::Jacobi, x, ParamSet::jacobi(1.2, 2.1));
    CHECK(dj.w == Approx(bj.value).margin(1e-15));
    CHECK(dj.dw == Approx(bj.d1).margin(1e-15));
  }
}

TEST_CASE("deformed prepotential frozen value", "[schrodinger]") {
  // L2, ell=1, g=1, x=1: w = w0(1; 2) + log((2.5+1)/(1.5+1))
  const System s(SystemSpec(Family::L2, 1, ParamSet::laguerre(1.0)));
  CHECK(s.w(1.0) == Approx(-0.5 + std::log(1.4)).margin(1e-14));
}

TEST_CASE("prepotential derivatives match finite differences",
          "[schrodinger]") {
  for (int ell = 1; ell <= 3; ++ell) {
    const SystemSpec specs[] = {
        SystemSpec(Family::L1, ell, ParamSet::laguerre(1.2)),
        SystemSpec(Family::L2, ell, ParamSet::laguerre(0.8)),
        SystemSpec(Family::J1, ell, ParamSet::jacobi(1.0, 2.5)),
        SystemSpec(Family::J2, ell, ParamSet::jacobi(2.5, 1.0)),
    };
    for (const SystemSpec& spec : specs) {
      const System sys(spec);
      auto wf = [&](double t) { return sys.w(t); };
      for (double x : interior_points(sys, 20)) {
        const auto d = sys.w_derivs(x);
        const double h = 1e-5 * std::max(1.0, std::abs(x));
        CHECK(d.dw == Approx(oracle::fd1(wf, x, h)).margin(1e-7));
        CHECK(d.d2w == Approx(oracle::fd2(wf, x, h)).margin(1e-6));
      }
    }
  }
}

TEST_CASE("potential is finite on compact interior subsets", "[schrodinger]") {
  // no xi roots inside the domain means no poles; sample densely
  for (const SystemSpec& spec :
       {SystemSpec(Family::L2, 3, ParamSet::laguerre(0.7)),
        SystemSpec(Family::J1, 3, ParamSet::jacobi(0.5, 3.0))}) {
    const System sys(spec);
    const double lo = 0.05;
    const double hi =
        spec.kind() == Kind::Laguerre ? 8.0 : 0.5 * kPi - 0.05;
    double peak = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double x = lo + (hi - lo) * i / 2000.0;
      const double u = sys.potential(x);
      REQUIRE(std::isfinite(u));
      peak = std::max(peak, std::abs(u));
    }
    CHECK(peak < 1e7);
  }
}

TEST_CASE("point evaluation bundle and one-shot wrappers", "[schrodinger]") {
  const SystemSpec spec(Family::L2, 2, ParamSet::laguerre(1.5));
  const System sys(spec);
  const PointEval pe = sys.point(1.1);
  CHECK(pe.x == 1.1);
  CHECK(pe.U == Approx(pe.dw * pe.dw + pe.d2w).epsilon(1e-14));
  CHECK(pe.w == Approx(sys.w(1.1)).margin(0));
  CHECK(pe.psi.sign * std::exp(pe.psi.log_abs) ==
        Approx(sys.psi(1.1)).epsilon(1e-14));

  CHECK(w_ell(spec, 1.1) == Approx(pe.w).margin(0));
  CHECK(potential(spec, 1.1) == Approx(pe.U).margin(0));
  CHECK(eigenfunction(spec, 2, 1.1) ==
        Approx(sys.phi(sys.state(2), 1.1)).margin(0));
  const SignLog pl = eigenfunction_log(spec, 2, 1.1);
  CHECK(pl.sign * std::exp(pl.log_abs) ==
        Approx(eigenfunction(spec, 2, 1.1)).epsilon(1e-12));
  CHECK(std::abs(schrodinger_residual(spec, 2, 1.1)) < 1e-9);
  CHECK(std::abs(shape_invariance_residual(spec, 1.1)) < 1e-10);
  CHECK(std::abs(annihilation_residual(spec, 1.1)) < 1e-11);
}

TEST_CASE("classical radial oscillator potential", "[schrodinger]") {
  // U = x^2 + g(g-1)/x^2 - (2g+1) evaluated at x=1, g=2: -2
  const System s(SystemSpec(Family::L1, 0, ParamSet::laguerre(2.0)));
  CHECK(s.potential(1.0) == Approx(-2.0).margin(1e-13));
}

TEST_CASE("deformation of the potential decays at large x", "[schrodinger]") {
  const System def(SystemSpec(Family::L1, 2, ParamSet::laguerre(1.0)));
  const System cls(SystemSpec(Family::L1, 0, ParamSet::laguerre(3.0)));
  double first = 0.0, prev = std::numeric_limits<double>::infinity();
  for (double x : {4.0, 8.0, 16.0, 32.0}) {
    const double gap = std::abs(def.potential(x) - cls.potential(x));
    CHECK(gap < prev);
    if (first == 0.0) first = gap;
    prev = gap;
  }
  // the deformation falls off like 1/x^2
  CHECK(prev < 0.05 * first);
  CHECK(prev < 1e-2);
}

TEST_CASE("ell=1 potentials of L1 and L2 are identical", "[schrodinger]") {
  for (double g : {0.7, 2.0}) {
    const System a(SystemSpec(Family::L1, 1, ParamSet::laguerre(g)));
    const System b(SystemSpec(Family::L2, 1, ParamSet::laguerre(g)));
    for (double x : interior_points(a, 50))
      CHECK(a.potential(x) == Approx(b.potential(x)).margin(1e-10));
  }
}

TEST_CASE("J2 potential is the mirrored J1 potential", "[schrodinger]") {
  const System s2(SystemSpec(Family::J2, 2, ParamSet::jacobi(2.0, 0.5)));
  const System s1(SystemSpec(Family::J1, 2, ParamSet::jacobi(0.5, 2.0)));
  for (double x : interior_points(s2, 50))
    CHECK(s2.potential(x) ==
          Approx(s1.potential(0.5 * kPi - x)).margin(1e-10));
}

TEST_CASE("groundstate is the exponential of the prepotential",
          "[schrodinger]") {
  for (const SystemSpec& spec :
       {SystemSpec(Family::L1, 2, ParamSet::laguerre(1.5)),
        SystemSpec(Family::J1, 1, ParamSet::jacobi(1.0, 2.0)),
        SystemSpec(Family::J2, 3, ParamSet::jacobi(3.0, 0.5))}) {
    const System sys(spec);
    const System::State g0 = sys.state(0);
    const std::vector<double> pts = interior_points(sys, 20);
    const double ref = sys.phi(g0, pts[0]) / std::exp(sys.w(pts[0]));
    for (double x : pts)
      CHECK(sys.phi(g0, x) / std::exp(sys.w(x)) ==
            Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("eigenfunctions vanish toward the domain edges", "[schrodinger]") {
  const System sl(SystemSpec(Family::L2, 2, ParamSet::laguerre(1.5)));
  const System sj(SystemSpec(Family::J1, 1, ParamSet::jacobi(1.0, 2.0)));
  for (const System* sys : {&sl, &sj}) {
    const System::State st = sys->state(2);
    double peak = 0.0;
    for (double x : interior_points(*sys, 50))
      peak = std::max(peak, std::abs(sys->phi(st, x)));
    const double lo = 1e-5;
    const double hi = sys->spec().kind() == Kind::Laguerre
                          ? std::sqrt(4.0 * 2 + 2.0 * (1.5 + 2)) + 5.5
                          : 0.5 * kPi - 1e-5;
    CHECK(std::abs(sys->phi(st, lo)) < 1e-4 * peak);
    CHECK(std::abs(sys->phi(st, hi)) < 1e-4 * peak);
  }
}

TEST_CASE("log-magnitude eigenfunction is consistent", "[schrodinger]") {
  const System sys(SystemSpec(Family::J1, 2, ParamSet::jacobi(1.0, 2.5)));
  const System::State st = sys.state(3);
  for (double x : interior_points(sys, 20)) {
    const SignLog sl = sys.phi_log(st, x);
    CHECK(sl.sign * std::exp(sl.log_abs) ==
          Approx(sys.phi(st, x)).epsilon(1e-12));
  }
}

TEST_CASE("n-th eigenfunction has exactly n interior nodes", "[schrodinger]") {
  const System sys(SystemSpec(Family::L2, 2, ParamSet::laguerre(1.5)));
  for (int n = 0; n <= 4; ++n) {
    const System::State st = sys.state(n);
    const auto [lo, hi] = mass_quantiles(sys, st, 0.001, 0.999);
    int changes = 0;
    double prev = sys.phi(st, lo);
    const int fine = 20000;
    for (int i = 1; i <= fine; ++i) {
      const double x = lo + (hi - lo) * i / fine;
      const double cur = sys.phi(st, x);
      if (prev * cur < 0.0) ++changes;
      prev = cur;
    }
    CHECK(changes == n);
  }
}

TEST_CASE("schrodinger residual vanishes", "[schrodinger]") {
  // classical groundstate: identically zero up to roundoff
  {
    const System sys(SystemSpec(Family::L1, 0, ParamSet::laguerre(2.0)));
    const System::State st = sys.state(0);
    for (double x : interior_points(sys, 100))
      CHECK(std::abs(sys.schrodinger_residual(st, x)) < 1e-10);
  }
  // deformed systems, excited states
  struct Case {
    SystemSpec spec;
    int n;
  };
  const Case cases[] = {
      {SystemSpec(Family::L2, 2, ParamSet::laguerre(1.5)), 3},
      {SystemSpec(Family::J1, 2, ParamSet::jacobi(1.0, 2.5)), 2},
  };
  for (const Case& c : cases) {
    const System sys(c.spec);
    const System::State st = sys.state(c.n);
    const std::vector<double> pts = interior_points(sys, 100);
    double sup = 0.0;
    for (double x : pts) sup = std::max(sup, std::abs(sys.phi(st, x)));
    for (double x : pts)
      CHECK(std::abs(sys.schrodinger_residual(st, x, 1e-3 * sup)) < 1e-8);
  }
}

TEST_CASE("analytic second derivative agrees with finite differences",
          "[schrodinger]") {
  const System sys(SystemSpec(Family::J1, 2, ParamSet::jacobi(1.0, 2.5)));
  const System::State st = sys.state(2);
  auto phif = [&](double t) { return sys.phi(st, t); };
  for (double x : interior_points(sys, 10)) {
    // reconstruct phi'' from the residual identity
    const double phi = sys.phi(st, x);
    const double res = sys.schrodinger_residual(st, x, 0.0);
    const double d2_analytic =
        (sys.potential(x) - st.energy) * phi - res * std::abs(phi);
    const double d2_fd = oracle::fd2(phif, x, 1e-4);
    CHECK(d2_analytic ==
          Approx(d2_fd).margin(1e-6 * std::max(1.0, std::abs(d2_fd))));
  }
}

TEST_CASE("shape invariance residual vanishes", "[schrodinger]") {
  {
    const System sys(SystemSpec(Family::L1, 3, ParamSet::laguerre(1.2)));
    const System shifted = sys.shifted_system();
    for (double x : interior_points(sys, 100))
      CHECK(std::abs(sys.shape_invariance_residual(shifted, x)) < 1e-9);
  }
  {
    const System sys(SystemSpec(Family::J2, 2, ParamSet::jacobi(3.0, 1.0)));
    const System shifted = sys.shifted_system();
    for (double x : interior_points(sys, 100))
      CHECK(std::abs(sys.shape_invariance_residual(shifted, x)) < 1e-9);
  }
  // ell = 0: the textbook undeformed shape invariance
  for (const SystemSpec& spec :
       {SystemSpec(Family::L1, 0, ParamSet::laguerre(2.0)),
        SystemSpec(Family::J1, 0, ParamSet::jacobi(1.5, 2.5))}) {
    const System sys(spec);
    const System shifted = sys.shifted_system();
    for (double x : interior_points(sys, 50))
      CHECK(std::abs(sys.shape_invariance_residual(shifted, x)) < 1e-10);
  }
}

TEST_CASE("annihilation operator kills the groundstate", "[schrodinger]") {
  for (const SystemSpec& spec :
       {SystemSpec(Family::L1, 3, ParamSet::laguerre(1.2)),
        SystemSpec(Family::L2, 2, ParamSet::laguerre(0.7)),
        SystemSpec(Family::J1, 3, ParamSet::jacobi(0.5, 3.0)),
        SystemSpec(Family::J2, 1, ParamSet::jacobi(2.0, 1.0))}) {
    const System sys(spec);
    for (double x : interior_points(sys, 50))
      CHECK(std::abs(sys.annihilation_residual(x)) < 1e-10);
  }
  // classical radial oscillator: exact to near machine precision
  const System cls(SystemSpec(Family::L1, 0, ParamSet::laguerre(2.0)));
  for (double x : interior_points(cls, 50))
    CHECK(std::abs(cls.annihilation_residual(x)) < 1e-12);
  // H phi_0 = 0 (E_0 = 0), consistency of the factorized form
  const System sys(SystemSpec(Family::L2, 2, ParamSet::laguerre(1.5)));
  const System::State g0 = sys.state(0);
  for (double x : interior_points(sys, 50))
    CHECK(std::abs(sys.schrodinger_residual(g0, x)) < 1e-10);
}

TEST_CASE("concurrent use of a shared system is safe", "[schrodinger]") {
  // pure functions over immutable values: parallel sweeps must reproduce the
  // serial results bit for bit
  const System sys(SystemSpec(Family::J1, 2, ParamSet::jacobi(1.0, 2.5)));
  const System::State st = sys.state(2);
  const std::vector<double> pts = interior_points(sys, 64);
  std::vector<double> serial(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    serial[i] = sys.schrodinger_residual(st, pts[i], 1e-6);

  std::vector<std::future<std::vector<double>>> jobs;
  for (int t = 0; t < 8; ++t)
    jobs.push_back(std::async(std::launch::async, [&] {
      std::vector<double> out(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i)
        out[i] = sys.schrodinger_residual(st, pts[i], 1e-6);
      return out;
    }));
  for (auto& job : jobs) {
    const std::vector<double> got = job.get();
    for (std::size_t i = 0; i < pts.size(); ++i)
      CHECK(got[i] == serial[i]);
  }
}

TEST_CASE("domain errors at the edges", "[schrodinger]") {
  const System sys(SystemSpec(Family::J1, 1, ParamSet::jacobi(1.0, 2.0)));
  CHECK_THROWS_AS(sys.w(0.0), DomainError);
  CHECK_THROWS_AS(sys.potential(0.5 * kPi), DomainError);
  CHECK_THROWS_AS(sys.psi(-0.2), DomainError);
  const System lsys(SystemSpec(Family::L1, 1, ParamSet::laguerre(1.0)));
  CHECK_THROWS_AS(lsys.w(0.0), DomainError);
  CHECK_NOTHROW(lsys.w(25.0));
}
