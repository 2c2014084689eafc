#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "xell/errors.hpp"
#include "xell/families.hpp"

namespace xell {

inline constexpr double kPi = 3.14159265358979323846;

/// A concrete quantum system: family tag, deformation degree ell (0 =
/// undeformed classical system) and validated couplings. Physical domain is
/// (0, inf) for Laguerre kinds and (0, pi/2) for Jacobi kinds.
struct SystemSpec {
  Family family = Family::L1;
  int ell = 0;
  ParamSet params;
  ParamCheck check = ParamCheck::strict;

  SystemSpec(Family f, int l, ParamSet p, ParamCheck c = ParamCheck::strict)
      : family(f), ell(l), params(p), check(c) {
    if (l < 0) throw InvalidParams("SystemSpec: ell must be >= 0");
    // The J1/J2 ordering constraints only matter once the deformation is
    // switched on; ell = 0 is the classical system for either ordering.
    validate_params(f, p, l == 0 ? ParamCheck::relaxed : c);
  }

  Kind kind() const { return kind_of(family); }
  double x_lo() const { return 0.0; }
  double x_hi() const {
    return kind() == Kind::Laguerre
               ? std::numeric_limits<double>::infinity()
               : 0.5 * kPi;
  }
};

/// Sinusoidal coordinate: eta = x^2 (Laguerre) or cos 2x (Jacobi).
/// Accepts the closed domain; the open interior is only required by the
/// logarithmic quantities below.
inline double eta(Kind k, double x) {
  if (k == Kind::Laguerre) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw DomainError("eta: need 0 <= x < inf");
    return x * x;
  }
  if (!(x >= 0.0 && x <= 0.5 * kPi))
    throw DomainError("eta: need 0 <= x <= pi/2");
  return std::cos(2.0 * x);
}

struct EtaDerivs {
  double d1;
  double d2;
};

inline EtaDerivs eta_derivs(Kind k, double x) {
  if (k == Kind::Laguerre) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw DomainError("eta_derivs: need 0 <= x < inf");
    return {2.0 * x, 2.0};
  }
  if (!(x >= 0.0 && x <= 0.5 * kPi))
    throw DomainError("eta_derivs: need 0 <= x <= pi/2");
  return {-2.0 * std::sin(2.0 * x), -4.0 * std::cos(2.0 * x)};
}

struct W0 {
  double value;
  double d1;
  double d2;
};

namespace detail {

inline void require_interior(Kind k, double x) {
  if (k == Kind::Laguerre) {
    if (!(x > 0.0) || !std::isfinite(x))
      throw DomainError("need 0 < x < inf");
  } else if (!(x > 0.0 && x < 0.5 * kPi)) {
    throw DomainError("need 0 < x < pi/2");
  }
}

}  // namespace detail

/// Undeformed prepotential with exact derivatives.
///   Laguerre: w0 = -x^2/2 + g log x
///   Jacobi:   w0 = g log sin x + h log cos x
inline W0 w0(Kind k, double x, const ParamSet& p) {
  detail::require_interior(k, x);
  if (k == Kind::Laguerre) {
    return {-0.5 * x * x + p.g * std::log(x), -x + p.g / x,
            -1.0 - p.g / (x * x)};
  }
  const double s = std::sin(x), c = std::cos(x);
  return {p.g * std::log(s) + p.h * std::log(c),
          p.g * c / s - p.h * s / c,
          -p.g / (s * s) - p.h / (c * c)};
}

struct SignLog {
  double sign;     // -1, 0 or +1
  double log_abs;  // -inf when the value is 0
};

struct PointEval {
  double x = 0;
  double w = 0, dw = 0, d2w = 0;
  double U = 0;
  SignLog psi{1.0, 0.0};
};

/// Evaluation engine for one system: caches the deforming polynomial at
/// lambda and lambda+delta together with their eta-derivatives, and
/// assembles every x-derivative analytically through the chain rule
/// (no numerical differentiation anywhere on this path).
class System {
 public:
  explicit System(SystemSpec spec) : spec_(std::move(spec)) {
    const ParamCheck check = spec_.ell == 0 ? ParamCheck::relaxed : spec_.check;
    xi_lam_ = xi(spec_.family, spec_.ell, spec_.params, check);
    xi_shf_ = xi(spec_.family, spec_.ell, spec_.params.shifted(1), check);
    dxi_lam_ = xi_lam_.derivative();
    d2xi_lam_ = dxi_lam_.derivative();
    dxi_shf_ = xi_shf_.derivative();
    d2xi_shf_ = dxi_shf_.derivative();
  }

  const SystemSpec& spec() const { return spec_; }

  struct WDerivs {
    double w, dw, d2w;
  };

  // w_ell = w0(x; lambda+ell*delta) + log xi(eta; lambda+delta)/xi(eta; lambda)
  WDerivs w_derivs(double x) const {
    const Kind k = spec_.kind();
    detail::require_interior(k, x);
    const W0 base = w0(k, x, spec_.params.shifted(spec_.ell));
    if (spec_.ell == 0) return {base.value, base.d1, base.d2};
    const double e = eta(k, x);
    const EtaDerivs ed = eta_derivs(k, x);
    const Ratio rl = ratio(xi_lam_, dxi_lam_, d2xi_lam_, e);
    const Ratio rs = ratio(xi_shf_, dxi_shf_, d2xi_shf_, e);
    const double q = rs.value / rl.value;
    if (!(q > 0.0))
      throw SingularXi("xi ratio not positive at x=" + std::to_string(x));
    return {base.value + std::log(q),
            base.d1 + ed.d1 * (rs.r - rl.r),
            base.d2 + ed.d2 * (rs.r - rl.r) + ed.d1 * ed.d1 * (rs.dr - rl.dr)};
  }

  double w(double x) const { return w_derivs(x).w; }

  // U = (dw)^2 + d2w
  double potential(double x) const {
    const WDerivs d = w_derivs(x);
    return d.dw * d.dw + d.d2w;
  }

  // psi_ell = e^{w0(x; lambda+ell*delta)} / xi(eta; lambda), in sign/log form.
  SignLog psi_log(double x) const {
    const Kind k = spec_.kind();
    detail::require_interior(k, x);
    const double v = xi_lam_(eta(k, x));
    if (v == 0.0) throw SingularXi("xi vanished at x=" + std::to_string(x));
    const double base = w0(k, x, spec_.params.shifted(spec_.ell)).value;
    return {v > 0.0 ? 1.0 : -1.0, base - std::log(std::abs(v))};
  }

  double psi(double x) const {
    const SignLog s = psi_log(x);
    return s.sign * std::exp(s.log_abs);
  }

  PointEval point(double x) const {
    const WDerivs d = w_derivs(x);
    return {x, d.w, d.dw, d.d2w, d.dw * d.dw + d.d2w, psi_log(x)};
  }

  /// One eigenstate: the polynomial part with eta-derivatives and the energy.
  struct State {
    int n = 0;
    XPolynomial xp;
    Polynomial dP, d2P;
    double energy = 0.0;
  };

  State state(int n) const {
    State st;
    st.n = n;
    st.xp = xpoly(spec_.family, spec_.ell, n, spec_.params,
                  spec_.ell == 0 ? ParamCheck::relaxed : spec_.check);
    st.dP = st.xp.poly.derivative();
    st.d2P = st.dP.derivative();
    st.energy = energy(spec_.family, spec_.ell, n, spec_.params);
    return st;
  }

  double phi(const State& st, double x) const {
    return psi(x) * st.xp.poly(eta(spec_.kind(), x));
  }

  SignLog phi_log(const State& st, double x) const {
    const SignLog ps = psi_log(x);
    const double pv = st.xp.poly(eta(spec_.kind(), x));
    if (pv == 0.0) return {0.0, -std::numeric_limits<double>::infinity()};
    return {ps.sign * (pv > 0.0 ? 1.0 : -1.0),
            ps.log_abs + std::log(std::abs(pv))};
  }

  /// (-phi'' + U phi - E phi) / max(|phi|, phi_floor), all derivatives
  /// assembled analytically via the product rule on psi * P(eta).
  double schrodinger_residual(const State& st, double x,
                              double phi_floor = 0.0) const {
    const Kind k = spec_.kind();
    detail::require_interior(k, x);
    const double e = eta(k, x);
    const EtaDerivs ed = eta_derivs(k, x);
    const W0 base = w0(k, x, spec_.params.shifted(spec_.ell));
    const Ratio rl = ratio(xi_lam_, dxi_lam_, d2xi_lam_, e);

    const double psip = base.d1 - ed.d1 * rl.r;  // psi'/psi
    const double psipp = psip * psip + base.d2 - ed.d2 * rl.r -
                         ed.d1 * ed.d1 * rl.dr;  // psi''/psi

    const double P = st.xp.poly(e);
    const double dP = st.dP(e);
    const double d2P = st.d2P(e);

    const double phi_over_psi = P;
    const double phipp_over_psi =
        psipp * P + 2.0 * psip * dP * ed.d1 + d2P * ed.d1 * ed.d1 + dP * ed.d2;

    const double U = potential(x);
    const double psi_val = psi(x);
    const double num = psi_val * (-phipp_over_psi + (U - st.energy) * phi_over_psi);
    const double den = std::max(std::abs(psi_val * P), phi_floor);
    return num / den;
  }

  /// (A phi_0)(x) / |phi_0(x)| with A = d/dx - dw. Identically zero in exact
  /// arithmetic since phi_0 is proportional to e^{w}.
  double annihilation_residual(double x) const {
    const Kind k = spec_.kind();
    detail::require_interior(k, x);
    const State st = state(0);
    const double e = eta(k, x);
    const EtaDerivs ed = eta_derivs(k, x);
    const W0 base = w0(k, x, spec_.params.shifted(spec_.ell));
    const Ratio rl = ratio(xi_lam_, dxi_lam_, d2xi_lam_, e);
    const double psip = base.d1 - ed.d1 * rl.r;

    const double P = st.xp.poly(e);
    const double dP = st.dP(e);
    const double dw = w_derivs(x).dw;
    // (phi0' - dw phi0)/|phi0| with the psi magnitude cancelled exactly.
    return ((psip - dw) * P + dP * ed.d1) / std::abs(P);
  }

  /// LHS - RHS of the shape invariance condition
  ///   (dw(lambda))^2 - d2w(lambda)
  ///     = (dw(lambda+delta))^2 + d2w(lambda+delta) + E_1(lambda+ell*delta).
  /// `shifted` must be the same family/ell at params.shifted(1).
  double shape_invariance_residual(const System& shifted, double x) const {
    const WDerivs a = w_derivs(x);
    const WDerivs b = shifted.w_derivs(x);
    const double e1 = energy(spec_.family, spec_.ell, 1, spec_.params);
    return (a.dw * a.dw - a.d2w) - (b.dw * b.dw + b.d2w + e1);
  }

  System shifted_system() const {
    return System(
        SystemSpec(spec_.family, spec_.ell, spec_.params.shifted(1), spec_.check));
  }

 private:
  struct Ratio {
    double value;  // xi(e)
    double r;      // xi'/xi
    double dr;     // (xi'/xi)' = xi''/xi - (xi'/xi)^2
  };

  static Ratio ratio(const Polynomial& p, const Polynomial& dp,
                     const Polynomial& d2p, double e) {
    const double v = p(e);
    if (v == 0.0) throw SingularXi("xi vanished");
    const double r = dp(e) / v;
    return {v, r, d2p(e) / v - r * r};
  }

  SystemSpec spec_;
  Polynomial xi_lam_, xi_shf_;
  Polynomial dxi_lam_, d2xi_lam_, dxi_shf_, d2xi_shf_;
};

// ---------------------------------------------------------------------------
// Sampling helpers shared by the verification harness and the tests.

/// m Chebyshev-distributed points on [lo, hi] (open: never hits an endpoint).
inline std::vector<double> chebyshev_points(double lo, double hi, int m) {
  std::vector<double> pts(m);
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int j = 0; j < m; ++j)
    pts[j] = mid + half * std::cos(kPi * (2.0 * j + 1.0) / (2.0 * m));
  return pts;
}

/// [q_lo, q_hi] quantile interval of the probability mass |phi_n|^2,
/// located by trapezoid accumulation of the log-sampled density.
inline std::pair<double, double> mass_quantiles(const System& sys,
                                                const System::State& st,
                                                double q_lo, double q_hi,
                                                int samples = 8192) {
  const SystemSpec& sp = sys.spec();
  const double eps = 1e-7;
  double lo = eps, hi;
  if (sp.kind() == Kind::Laguerre) {
    const double gl = sp.params.g + sp.ell;
    hi = std::sqrt(4.0 * st.n + 2.0 * gl + 1.0) + 6.0;
  } else {
    hi = 0.5 * kPi - eps;
  }
  std::vector<double> xs(samples), logd(samples);
  double logmax = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    xs[i] = lo + (hi - lo) * i / (samples - 1.0);
    logd[i] = 2.0 * sys.phi_log(st, xs[i]).log_abs;
    logmax = std::max(logmax, logd[i]);
  }
  std::vector<double> cum(samples, 0.0);
  for (int i = 1; i < samples; ++i) {
    const double a = std::exp(logd[i - 1] - logmax);
    const double b = std::exp(logd[i] - logmax);
    cum[i] = cum[i - 1] + 0.5 * (a + b) * (xs[i] - xs[i - 1]);
  }
  const double total = cum.back();
  double x_lo = lo, x_hi = hi;
  for (int i = 1; i < samples; ++i) {
    if (cum[i] >= q_lo * total) {
      x_lo = xs[i];
      break;
    }
  }
  for (int i = samples - 1; i > 0; --i) {
    if (cum[i - 1] <= q_hi * total) {
      x_hi = xs[i];
      break;
    }
  }
  return {x_lo, x_hi};
}

/// Standard interior sample: m Chebyshev points between the 1% and 99%
/// quantiles of the groundstate mass. Keeps residual checks clear of the
/// domain edges while covering the support.
inline std::vector<double> interior_points(const System& sys, int m = 100) {
  const System::State ground = sys.state(0);
  const auto [lo, hi] = mass_quantiles(sys, ground, 0.01, 0.99);
  return chebyshev_points(lo, hi, m);
}

// ---------------------------------------------------------------------------
// One-shot convenience wrappers over System (ops named as used by the CLI).

inline double w_ell(const SystemSpec& s, double x) { return System(s).w(x); }

inline double potential(const SystemSpec& s, double x) {
  return System(s).potential(x);
}

inline double eigenfunction(const SystemSpec& s, int n, double x) {
  const System sys(s);
  return sys.phi(sys.state(n), x);
}

inline SignLog eigenfunction_log(const SystemSpec& s, int n, double x) {
  const System sys(s);
  return sys.phi_log(sys.state(n), x);
}

/// Residual normalized by max(|phi(x)|, 1e-3 * sup |phi| over the standard
/// interior sample).
inline double schrodinger_residual(const SystemSpec& s, int n, double x) {
  const System sys(s);
  const System::State st = sys.state(n);
  double sup = 0.0;
  for (double p : interior_points(sys))
    sup = std::max(sup, std::abs(sys.phi(st, p)));
  return sys.schrodinger_residual(st, x, 1e-3 * sup);
}

inline double shape_invariance_residual(const SystemSpec& s, double x) {
  const System sys(s);
  return sys.shape_invariance_residual(sys.shifted_system(), x);
}

inline double annihilation_residual(const SystemSpec& s, double x) {
  return System(s).annihilation_residual(x);
}

}  // namespace xell
