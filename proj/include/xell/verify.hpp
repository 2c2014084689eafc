#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "xell/errors.hpp"
#include "xell/families.hpp"
#include "xell/quadrature.hpp"
#include "xell/schrodinger.hpp"
#include "xell/tridiag.hpp"

namespace xell {

/// Result of one verification run. Invariant: pass == (metric <= tolerance).
struct CheckReport {
  std::string check;
  std::string params;
  double metric = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double slope = std::numeric_limits<double>::quiet_NaN();  // when fitted
  std::vector<double> levels;  // per-refinement values when applicable

  static CheckReport make(std::string check, std::string params,
                          double metric, double tolerance) {
    CheckReport r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.metric = metric;
    r.tolerance = tolerance;
    r.pass = metric <= tolerance;
    return r;
  }
};

namespace detail {

inline std::string fmt_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline std::string spec_label(const SystemSpec& s, int n = -1) {
  std::ostringstream os;
  os << "family=" << to_string(s.family) << " ell=" << s.ell
     << " g=" << s.params.g;
  if (s.params.kind == Kind::Jacobi) os << " h=" << s.params.h;
  if (n >= 0) os << " n=" << n;
  return os.str();
}

// Least-squares slope and intercept of y against x.
inline std::pair<double, double> linear_fit(const std::vector<double>& x,
                                            const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {slope, (sy - slope * sx) / n};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Orthogonality: Gram matrix by Gauss quadrature in the eta variable.

struct GramOptions {
  double rel_tol = 1e-10;  // node-doubling settle tolerance
  int n_start = 64;
  int n_cap = 2048;
};

struct GramResult {
  std::vector<std::vector<double>> matrix;  // (n_max+1) x (n_max+1)
  int nodes_used = 0;
};

/// Entry (n, m) = integral psi_ell^2 P_{ell,n} P_{ell,m} dx, computed in eta:
///   Laguerre: 1/2 * int_0^inf e^{-eta} eta^{g+ell-1/2} P_n P_m / xi^2 deta
///   Jacobi:   2^{-(g+h+2ell+1)} *
///             int_{-1}^{1} (1-eta)^{g+ell-1/2} (1+eta)^{h+ell-1/2}
///                          P_n P_m / xi^2 deta
/// The rational factor 1/xi^2 is folded into the integrand; correctness is
/// certified by node-doubling until the whole matrix settles.
inline GramResult gram_matrix(const SystemSpec& spec, int n_max,
                              GramOptions opt = {}) {
  const ParamCheck check =
      spec.ell == 0 ? ParamCheck::relaxed : spec.check;
  const Polynomial xi_lam = xi(spec.family, spec.ell, spec.params, check);
  std::vector<Polynomial> ps;
  ps.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    ps.push_back(xpoly(spec.family, spec.ell, n, spec.params, check).poly);

  const double g = spec.params.g, h = spec.params.h;
  const int ell = spec.ell;
  const bool lag = spec.kind() == Kind::Laguerre;
  const double prefactor =
      lag ? 0.5 : std::exp(-(g + h + 2.0 * ell + 1.0) * std::log(2.0));

  auto compute = [&](int nodes) {
    const QuadratureRule rule =
        lag ? gauss_laguerre_rule(nodes, g + ell - 0.5)
            : gauss_jacobi_rule(nodes, g + ell - 0.5, h + ell - 0.5);
    std::vector<std::vector<double>> m(
        n_max + 1, std::vector<double>(n_max + 1, 0.0));
    std::vector<double> pv(n_max + 1);
    for (int i = 0; i < rule.order; ++i) {
      const double x = rule.nodes[i];
      const double xv = xi_lam(x);
      const double wq = rule.weights[i] / (xv * xv);
      for (int n = 0; n <= n_max; ++n) pv[n] = ps[n](x);
      for (int n = 0; n <= n_max; ++n)
        for (int mi = n; mi <= n_max; ++mi)
          m[n][mi] += wq * pv[n] * pv[mi];
    }
    for (int n = 0; n <= n_max; ++n)
      for (int mi = n; mi <= n_max; ++mi) {
        m[n][mi] *= prefactor;
        m[mi][n] = m[n][mi];
      }
    return m;
  };

  auto prev = compute(opt.n_start);
  for (int nodes = 2 * opt.n_start; nodes <= opt.n_cap; nodes *= 2) {
    auto cur = compute(nodes);
    double change = 0.0;
    for (int n = 0; n <= n_max; ++n)
      for (int m = 0; m <= n_max; ++m) {
        const double scale = std::sqrt(cur[n][n] * cur[m][m]);
        change = std::max(change, std::abs(cur[n][m] - prev[n][m]) / scale);
      }
    if (change < opt.rel_tol) return {std::move(cur), nodes};
    prev = std::move(cur);
  }
  throw NoConvergence("gram_matrix: node-doubling did not settle below cap");
}

/// Off-diagonals relative to sqrt(G_nn G_mm); diagonals against norm_closed.
inline std::vector<CheckReport> ortho_check(const SystemSpec& spec, int n_max,
                                            double tol, GramOptions opt = {}) {
  const GramResult gr = gram_matrix(spec, n_max, opt);
  double off = 0.0, diag = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n_max; ++m) {
      if (n == m) continue;
      off = std::max(off, std::abs(gr.matrix[n][m]) /
                              std::sqrt(gr.matrix[n][n] * gr.matrix[m][m]));
    }
    const double closed = norm_closed(spec.family, spec.ell, n, spec.params,
                                      spec.check);
    diag = std::max(diag, std::abs(gr.matrix[n][n] - closed) / closed);
  }
  const std::string label = detail::spec_label(spec);
  return {CheckReport::make("ortho.offdiag", label, off, tol),
          CheckReport::make("ortho.diag", label, diag, tol)};
}

/// Dense sign-sampling of xi at lambda and lambda+delta over the physical
/// eta-domain; metric is the number of sign changes found (tolerance 0).
inline CheckReport sign_check(const SystemSpec& spec, int samples = 10000) {
  const ParamCheck check = spec.ell == 0 ? ParamCheck::relaxed : spec.check;
  const Polynomial a = xi(spec.family, spec.ell, spec.params, check);
  const Polynomial b = xi(spec.family, spec.ell, spec.params.shifted(1), check);
  std::vector<double> grid(samples);
  if (spec.kind() == Kind::Laguerre) {
    const double lo = std::log(1e-4), hi = std::log(200.0);
    for (int i = 0; i < samples; ++i)
      grid[i] = std::exp(lo + (hi - lo) * i / (samples - 1.0));
  } else {
    for (int i = 0; i < samples; ++i)
      grid[i] = -1.0 + 2.0 * (i + 0.5) / samples;
  }
  int changes = 0;
  for (const Polynomial* p : {&a, &b}) {
    double prev = (*p)(grid[0]);
    for (int i = 1; i < samples; ++i) {
      const double cur = (*p)(grid[i]);
      if (prev * cur < 0.0) ++changes;
      prev = cur;
    }
  }
  return CheckReport::make("xi.sign", detail::spec_label(spec),
                           static_cast<double>(changes), 0.0);
}

// ---------------------------------------------------------------------------
// Pointwise residual checks over the standard interior sample.

inline CheckReport eigen_check(const SystemSpec& spec, int n_upto, double tol,
                               int m_points = 100) {
  const System sys(spec);
  const std::vector<double> pts = interior_points(sys, m_points);
  double worst = 0.0;
  for (int n = 0; n <= n_upto; ++n) {
    const System::State st = sys.state(n);
    double sup = 0.0;
    for (double x : pts) sup = std::max(sup, std::abs(sys.phi(st, x)));
    for (double x : pts)
      worst = std::max(
          worst, std::abs(sys.schrodinger_residual(st, x, 1e-3 * sup)));
  }
  std::string label = detail::spec_label(spec) + " n<=" +
                      std::to_string(n_upto);
  return CheckReport::make("eigen.residual", std::move(label), worst, tol);
}

inline CheckReport shape_check(const SystemSpec& spec, double tol,
                               int m_points = 100) {
  const System sys(spec);
  const System shifted = sys.shifted_system();
  double worst = 0.0;
  for (double x : interior_points(sys, m_points))
    worst = std::max(worst,
                     std::abs(sys.shape_invariance_residual(shifted, x)));
  return CheckReport::make("shape.residual", detail::spec_label(spec), worst,
                           tol);
}

inline CheckReport annihilation_check(const SystemSpec& spec, double tol,
                                      int m_points = 50) {
  const System sys(spec);
  double worst = 0.0;
  for (double x : interior_points(sys, m_points))
    worst = std::max(worst, std::abs(sys.annihilation_residual(x)));
  return CheckReport::make("annihilation.residual", detail::spec_label(spec),
                           worst, tol);
}

// ---------------------------------------------------------------------------
// Mirror relations between J2 and J1 (and the ell = 1 coincidences).

/// For g > h > 0:
///   xi^{J2}_ell(x; g,h)    = (-1)^ell     xi^{J1}_ell(-x; h,g)
///   P^{J2}_{ell,n}(x; g,h) = (-1)^{ell+n} P^{J1}_{ell,n}(-x; h,g)
///   U^{J2}(x; g,h)         = U^{J1}(pi/2 - x; h,g)
///   h^{J2}_{ell,n}(g,h)    = h^{J1}_{ell,n}(h,g)
inline std::vector<CheckReport> mirror_check(int ell, int n, double g,
                                             double h, double tol_coeff,
                                             double tol_u,
                                             int m_points = 100) {
  const ParamSet p2 = ParamSet::jacobi(g, h);   // J2 ordering (g > h)
  const ParamSet p1 = ParamSet::jacobi(h, g);   // swapped for J1
  validate_params(Family::J2, p2);
  validate_params(Family::J1, p1);
  std::ostringstream os;
  os << "ell=" << ell << " n=" << n << " g=" << g << " h=" << h;
  const std::string label = os.str();
  std::vector<CheckReport> out;

  const Polynomial xi2 = xi(Family::J2, ell, p2);
  const Polynomial xi1m =
      (ell % 2 == 0 ? 1.0 : -1.0) * xi(Family::J1, ell, p1).reflected();
  out.push_back(CheckReport::make(
      "mirror.xi", label,
      max_coeff_diff(xi2, xi1m) / std::max(xi2.coeff_scale(), 1e-300),
      tol_coeff));

  const Polynomial poly2 = xpoly(Family::J2, ell, n, p2).poly;
  const Polynomial poly1m = ((ell + n) % 2 == 0 ? 1.0 : -1.0) *
                            xpoly(Family::J1, ell, n, p1).poly.reflected();
  out.push_back(CheckReport::make(
      "mirror.P", label,
      max_coeff_diff(poly2, poly1m) / std::max(poly2.coeff_scale(), 1e-300),
      tol_coeff));

  const System sys2(SystemSpec(Family::J2, ell, p2));
  const System sys1(SystemSpec(Family::J1, ell, p1));
  double worst_u = 0.0;
  for (double x : interior_points(sys2, m_points))
    worst_u = std::max(worst_u, std::abs(sys2.potential(x) -
                                         sys1.potential(0.5 * kPi - x)));
  out.push_back(CheckReport::make("mirror.U", label, worst_u, tol_u));

  const double n2 = norm_closed(Family::J2, ell, n, p2);
  const double n1 = norm_closed(Family::J1, ell, n, p1);
  out.push_back(CheckReport::make("mirror.norm", label,
                                  std::abs(n2 - n1) / n1, 1e-12));
  return out;
}

/// ell = 1 coincidences. Laguerre: xi_1^{L1} = -xi_1^{L2},
/// P_{1,n}^{L1} = -P_{1,n}^{L2}, U_1^{L1} = U_1^{L2}.
inline std::vector<CheckReport> coincidence_check_laguerre(
    double g, int n_upto, double tol_coeff, double tol_u, int m_points = 100) {
  const ParamSet p = ParamSet::laguerre(g);
  std::ostringstream os;
  os << "g=" << g;
  const std::string label = os.str();
  std::vector<CheckReport> out;

  const Polynomial x1 = xi(Family::L1, 1, p);
  const Polynomial x2 = xi(Family::L2, 1, p);
  out.push_back(CheckReport::make(
      "coincide.xi.L", label,
      (x1 + x2).coeff_scale() / x1.coeff_scale(), tol_coeff));

  double worst_p = 0.0;
  for (int n = 0; n <= n_upto; ++n) {
    const Polynomial a = xpoly(Family::L1, 1, n, p).poly;
    const Polynomial b = xpoly(Family::L2, 1, n, p).poly;
    worst_p = std::max(worst_p, (a + b).coeff_scale() / a.coeff_scale());
  }
  out.push_back(CheckReport::make("coincide.P.L",
                                  label + " n<=" + std::to_string(n_upto),
                                  worst_p, tol_coeff));

  const System s1(SystemSpec(Family::L1, 1, p));
  const System s2(SystemSpec(Family::L2, 1, p));
  double worst_u = 0.0;
  for (double x : interior_points(s1, m_points))
    worst_u = std::max(worst_u, std::abs(s1.potential(x) - s2.potential(x)));
  out.push_back(CheckReport::make("coincide.U.L", label, worst_u, tol_u));
  return out;
}

/// Jacobi ell = 1 coincidence xi_1^{J1} = -xi_1^{J2} at the *same* (g, h);
/// one of the two orderings is necessarily outside its physical range, so
/// both polynomials are built in relaxed mode.
inline CheckReport coincidence_check_jacobi(double g, double h,
                                            double tol_coeff) {
  const ParamSet p = ParamSet::jacobi(g, h);
  const Polynomial a = xi(Family::J1, 1, p, ParamCheck::relaxed);
  const Polynomial b = xi(Family::J2, 1, p, ParamCheck::relaxed);
  std::ostringstream os;
  os << "g=" << g << " h=" << h;
  return CheckReport::make("coincide.xi.J", os.str(),
                           (a + b).coeff_scale() / a.coeff_scale(),
                           tol_coeff);
}

// ---------------------------------------------------------------------------
// Limits: Jacobi -> Laguerre base polynomials and whole-family h -> inf.

/// lim_{beta->inf} P_n^{(alpha, s*beta)}(1 - 2x/beta) = L_n^{(alpha)}(s*x).
/// Evaluated by value recurrences (the monomial form cancels at large beta).
/// Reports the fitted log-log slope of the error against beta and the
/// fitted-constant tail bound at the largest beta.
inline std::vector<CheckReport> limit_check_base(
    int n, double alpha, int sign, const std::vector<double>& betas,
    const std::vector<double>& xs, double slope_tol = 0.2) {
  std::ostringstream os;
  os << "n=" << n << " alpha=" << alpha << " sign=" << (sign >= 0 ? "+" : "-");
  const std::string label = os.str();
  const double s = sign >= 0 ? 1.0 : -1.0;

  std::vector<double> errs;
  errs.reserve(betas.size());
  for (double beta : betas) {
    double e = 0.0;
    for (double x : xs)
      e = std::max(e, std::abs(jacobi_value(n, alpha, s * beta,
                                            1.0 - 2.0 * x / beta) -
                               laguerre_value(n, alpha, s * x)));
    errs.push_back(e);
  }

  std::vector<CheckReport> out;
  if (n == 0) {  // both sides are identically 1
    CheckReport r = CheckReport::make("limit.base.exact", label,
                                      *std::max_element(errs.begin(),
                                                        errs.end()),
                                      0.0);
    r.levels = errs;
    out.push_back(std::move(r));
    return out;
  }

  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    lx.push_back(std::log(betas[i]));
    ly.push_back(std::log(std::max(errs[i], 1e-300)));
  }
  const auto [m, b] = detail::linear_fit(lx, ly);
  const double slope = -m;                 // err ~ C * beta^{-slope}
  const double c_fit = std::exp(b);

  CheckReport rs = CheckReport::make("limit.base.slope", label,
                                     std::abs(slope - 1.0), slope_tol);
  rs.slope = slope;
  rs.levels = errs;
  out.push_back(std::move(rs));

  CheckReport rt = CheckReport::make(
      "limit.base.tail", label, errs.back() / (1e-3 * c_fit), 1.0);
  rt.levels = errs;
  out.push_back(std::move(rt));
  return out;
}

enum class LimitPair { J1toL2, J2toL1 };

inline const char* to_string(LimitPair p) {
  return p == LimitPair::J1toL2 ? "J1L2" : "J2L1";
}

/// Whole-family h -> inf limit under the rescaling x = xL / sqrt(h):
///   xi^{J}(eta_J(x); g,h)            -> xi^{L}(eta_L(xL); g)
///   w^{J}(x; g,h) + (g+ell)/2 log h  -> w^{L}(xL; g)
///   U^{J}(x; g,h) / h                -> U^{L}(xL; g)
///   P^{J}_{ell,n}(eta_J(x); g,h)     -> P^{L}_{ell,n}(eta_L(xL); g)
/// with (J1 -> L2) and (J2 -> L1). Emits per-component monotone-decrease and
/// slope reports over the h schedule.
inline std::vector<CheckReport> limit_check_family(
    LimitPair pair, int ell, int n, double g, const std::vector<double>& hs,
    const std::vector<double>& xls, double slope_tol = 0.2) {
  const Family jf = pair == LimitPair::J1toL2 ? Family::J1 : Family::J2;
  const Family lf = pair == LimitPair::J1toL2 ? Family::L2 : Family::L1;
  // J1 keeps h > g through the schedule; J2 is evaluated past its ordering
  // constraint (that is the point of the limit), hence relaxed.
  const ParamCheck check =
      pair == LimitPair::J1toL2 ? ParamCheck::strict : ParamCheck::relaxed;

  std::ostringstream os;
  os << "pair=" << to_string(pair) << " ell=" << ell << " n=" << n
     << " g=" << g;
  const std::string label = os.str();

  const ParamSet lp = ParamSet::laguerre(g);
  const System lsys(SystemSpec(lf, ell, lp));
  const Polynomial lxi = xi(lf, ell, lp);
  const XPolynomial lpoly = xpoly(lf, ell, n, lp);

  const char* comps[4] = {"xi", "w", "U", "P"};
  std::vector<std::vector<double>> errs(4);

  for (double h : hs) {
    const ParamSet jp = ParamSet::jacobi(g, h);
    validate_params(jf, jp, check);
    const System jsys(SystemSpec(jf, ell, jp, check));
    const Polynomial jxi = xi(jf, ell, jp, check);
    const XPolynomial jpoly = xpoly(jf, ell, n, jp, check);
    const double shift = 0.5 * (g + ell) * std::log(h);
    const double rh = std::sqrt(h);
    double e[4] = {0.0, 0.0, 0.0, 0.0};
    for (double xl : xls) {
      const double xj = xl / rh;
      const double ej = eta(Kind::Jacobi, xj);
      const double el = eta(Kind::Laguerre, xl);
      e[0] = std::max(e[0], std::abs(jxi(ej) - lxi(el)));
      e[1] = std::max(e[1],
                      std::abs(jsys.w(xj) + shift - lsys.w(xl)));
      e[2] = std::max(e[2],
                      std::abs(jsys.potential(xj) / h - lsys.potential(xl)));
      e[3] = std::max(e[3], std::abs(jpoly.value_via_parts(ej) -
                                     lpoly.poly(el)));
    }
    for (int c = 0; c < 4; ++c) errs[c].push_back(e[c]);
  }

  std::vector<CheckReport> out;
  std::vector<double> lh;
  for (double h : hs) lh.push_back(std::log(h));
  for (int c = 0; c < 4; ++c) {
    double worst_ratio = 0.0;
    for (std::size_t i = 1; i < errs[c].size(); ++i)
      worst_ratio = std::max(worst_ratio,
                             errs[c][i] / std::max(errs[c][i - 1], 1e-300));
    CheckReport rm = CheckReport::make(
        std::string("limit.family.") + comps[c] + ".monotone", label,
        worst_ratio, 1.0);
    rm.levels = errs[c];
    out.push_back(std::move(rm));

    std::vector<double> ly;
    for (double e2 : errs[c]) ly.push_back(std::log(std::max(e2, 1e-300)));
    const auto [m, b] = detail::linear_fit(lh, ly);
    (void)b;
    CheckReport rsw = CheckReport::make(
        std::string("limit.family.") + comps[c] + ".slope", label,
        std::abs(-m - 1.0), slope_tol);
    rsw.slope = -m;
    rsw.levels = errs[c];
    out.push_back(std::move(rsw));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Independent spectra: second-order central finite differences, Dirichlet
// walls, Sturm-bisection eigenvalues of the tridiagonal operator.

struct FdGrid {
  double x_lo = 0.0;
  double x_hi = 0.0;
  int n_points = 0;  // number of grid intervals
};

/// Lowest k eigenvalues of -d^2/dx^2 + U on the given grid (no refinement
/// certification).
inline std::vector<double> fd_spectrum_raw(const SystemSpec& spec, FdGrid grid,
                                           int k) {
  if (grid.n_points < 8) throw GridTooCoarse("fd_spectrum: need more points");
  const System sys(spec);
  const double dx = (grid.x_hi - grid.x_lo) / grid.n_points;
  const int m = grid.n_points - 1;  // interior unknowns
  std::vector<double> diag(m), off(m - 1, -1.0 / (dx * dx));
  for (int i = 0; i < m; ++i) {
    const double x = grid.x_lo + (i + 1) * dx;
    diag[i] = 2.0 / (dx * dx) + sys.potential(x);
  }
  return tridiag::lowest_eigenvalues(diag, off, k, 1e-10);
}

/// As fd_spectrum_raw, but certified: the grid is doubled once and the
/// computation rejected (GridTooCoarse) if the lowest eigenvalue moves by
/// more than certify_tol.
inline std::vector<double> fd_spectrum(const SystemSpec& spec, FdGrid grid,
                                       int k, double certify_tol = 1e-2) {
  const std::vector<double> coarse = fd_spectrum_raw(spec, grid, k);
  FdGrid fine = grid;
  fine.n_points *= 2;
  const std::vector<double> refined = fd_spectrum_raw(spec, fine, k);
  if (std::abs(coarse[0] - refined[0]) > certify_tol)
    throw GridTooCoarse("fd_spectrum: lowest eigenvalue moved " +
                        detail::fmt_double(std::abs(coarse[0] - refined[0])) +
                        " under refinement");
  return coarse;
}

/// Compares the FD spectrum against the analytic energies and measures the
/// observed convergence order from a half-resolution grid.
inline std::vector<CheckReport> spectrum_check(const SystemSpec& spec,
                                               FdGrid grid, int k,
                                               double tol_values,
                                               double order_tol = 0.7) {
  std::vector<double> exact(k);
  for (int n = 0; n < k; ++n)
    exact[n] = energy(spec.family, spec.ell, n, spec.params);

  const std::vector<double> full = fd_spectrum_raw(spec, grid, k);
  FdGrid half = grid;
  half.n_points /= 2;
  const std::vector<double> coarse = fd_spectrum_raw(spec, half, k);

  double worst = 0.0;
  for (int n = 0; n < k; ++n)
    worst = std::max(worst, std::abs(full[n] - exact[n]));
  CheckReport rv = CheckReport::make("spectrum.values",
                                     detail::spec_label(spec) + " k=" +
                                         std::to_string(k),
                                     worst, tol_values);
  rv.levels = full;

  // Observed order p from err(N/2)/err(N) ~ 2^p; the n = 0 error is too
  // small to divide reliably, so use the excited states.
  double worst_dev = 0.0, mean_p = 0.0;
  int counted = 0;
  for (int n = 1; n < k; ++n) {
    const double ef = std::abs(full[n] - exact[n]);
    const double ec = std::abs(coarse[n] - exact[n]);
    if (ef <= 0.0 || ec <= 0.0) continue;
    const double p = std::log2(ec / ef);
    worst_dev = std::max(worst_dev, std::abs(p - 2.0));
    mean_p += p;
    ++counted;
  }
  CheckReport ro = CheckReport::make("spectrum.order",
                                     detail::spec_label(spec), worst_dev,
                                     order_tol);
  if (counted > 0) ro.slope = mean_p / counted;
  return {std::move(rv), std::move(ro)};
}

}  // namespace xell
