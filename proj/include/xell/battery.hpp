#pragma once

#include <string>
#include <vector>

#include "xell/verify.hpp"

namespace xell {

// Default tolerances of the verification battery. The scale factor (CLI flag
// or XELL_TOL_SCALE) multiplies all of them.
inline constexpr double kTolOrtho = 1e-8;
inline constexpr double kTolEigen = 1e-8;
inline constexpr double kTolAnnihilation = 1e-10;
inline constexpr double kTolShape = 1e-9;
inline constexpr double kTolMirror = 1e-10;
inline constexpr double kTolCoincideCoeff = 1e-12;
inline constexpr double kTolCoincideU = 1e-10;
inline constexpr double kTolSlope = 0.2;  // fitted slope within [0.8, 1.2]
inline constexpr double kTolSpectrumL = 1e-2;
inline constexpr double kTolSpectrumJ = 5e-2;

struct BatteryScope {
  bool full = false;       // full acceptance matrix vs. quick smoke set
  double tol_scale = 1.0;  // multiplies every default tolerance
};

namespace detail {

struct JPair {
  double g, h;
};

inline std::vector<int> battery_ells(bool full) {
  return full ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 2};
}
inline std::vector<double> battery_gs(bool full) {
  return full ? std::vector<double>{0.7, 1.5, 3.0} : std::vector<double>{1.5};
}
inline std::vector<JPair> battery_j1(bool full) {
  return full ? std::vector<JPair>{{1.0, 2.0}, {0.5, 3.0}}
              : std::vector<JPair>{{1.0, 2.0}};
}
inline std::vector<JPair> battery_j2(bool full) {
  return full ? std::vector<JPair>{{2.0, 1.0}, {3.0, 0.5}}
              : std::vector<JPair>{{2.0, 1.0}};
}

}  // namespace detail

/// The system matrix the acceptance criteria quantify over.
inline std::vector<SystemSpec> battery_systems(bool full) {
  std::vector<SystemSpec> out;
  for (int ell : detail::battery_ells(full)) {
    for (Family f : {Family::L1, Family::L2})
      for (double g : detail::battery_gs(full))
        out.emplace_back(f, ell, ParamSet::laguerre(g));
    for (const auto& [g, h] : detail::battery_j1(full))
      out.emplace_back(Family::J1, ell, ParamSet::jacobi(g, h));
    for (const auto& [g, h] : detail::battery_j2(full))
      out.emplace_back(Family::J2, ell, ParamSet::jacobi(g, h));
  }
  return out;
}

/// Orthogonality (Gram vs. closed-form norms) plus the xi sign-constancy
/// precondition.
inline std::vector<CheckReport> ortho_battery(BatteryScope sc) {
  const int n_max = sc.full ? 5 : 3;
  GramOptions opt;
  if (!sc.full) opt.n_cap = 256;
  std::vector<CheckReport> out;
  for (const SystemSpec& spec : battery_systems(sc.full)) {
    for (CheckReport& r : ortho_check(spec, n_max, kTolOrtho * sc.tol_scale,
                                      opt))
      out.push_back(std::move(r));
    out.push_back(sign_check(spec));
  }
  return out;
}

inline std::vector<CheckReport> eigen_battery(BatteryScope sc) {
  const int n_upto = sc.full ? 4 : 3;
  std::vector<CheckReport> out;
  for (const SystemSpec& spec : battery_systems(sc.full)) {
    out.push_back(eigen_check(spec, n_upto, kTolEigen * sc.tol_scale));
    out.push_back(
        annihilation_check(spec, kTolAnnihilation * sc.tol_scale));
  }
  return out;
}

inline std::vector<CheckReport> shape_battery(BatteryScope sc) {
  std::vector<CheckReport> out;
  for (const SystemSpec& spec : battery_systems(sc.full))
    out.push_back(shape_check(spec, kTolShape * sc.tol_scale));
  return out;
}

/// Mirror identities plus the ell = 1 L1/L2 and J1/J2 coincidences.
inline std::vector<CheckReport> mirror_battery(BatteryScope sc) {
  std::vector<CheckReport> out;
  const std::vector<detail::JPair> ghs =
      sc.full ? std::vector<detail::JPair>{{2.0, 0.5}, {3.0, 1.0}}
              : std::vector<detail::JPair>{{2.0, 0.5}};
  const std::vector<int> ells = detail::battery_ells(sc.full);
  const int n_hi = sc.full ? 4 : 1;
  for (const auto& [g, h] : ghs)
    for (int ell : ells)
      for (int n = 0; n <= n_hi; ++n)
        for (CheckReport& r :
             mirror_check(ell, n, g, h, kTolMirror * sc.tol_scale,
                          kTolMirror * sc.tol_scale))
          out.push_back(std::move(r));

  for (double g : detail::battery_gs(sc.full))
    for (CheckReport& r : coincidence_check_laguerre(
             g, 5, kTolCoincideCoeff * sc.tol_scale,
             kTolCoincideU * sc.tol_scale))
      out.push_back(std::move(r));
  std::vector<detail::JPair> jghs = detail::battery_j1(sc.full);
  for (const auto& [g, h] : detail::battery_j2(sc.full))
    jghs.push_back({g, h});
  for (const auto& [g, h] : jghs)
    out.push_back(
        coincidence_check_jacobi(g, h, kTolCoincideCoeff * sc.tol_scale));
  return out;
}

inline std::vector<CheckReport> limit_battery(BatteryScope sc) {
  std::vector<CheckReport> out;
  const std::vector<double> betas = {1e2, 1e3, 1e4, 1e5};
  const std::vector<double> base_xs = chebyshev_points(0.25, 3.0, 10);
  const std::vector<int> ns = sc.full ? std::vector<int>{1, 2, 4, 8}
                                      : std::vector<int>{1, 2};
  const std::vector<double> alphas =
      sc.full ? std::vector<double>{0.5, 1.5} : std::vector<double>{0.5};
  const std::vector<int> signs = sc.full ? std::vector<int>{+1, -1}
                                         : std::vector<int>{+1};
  for (int n : ns)
    for (double alpha : alphas)
      for (int sign : signs)
        for (CheckReport& r : limit_check_base(n, alpha, sign, betas, base_xs,
                                               kTolSlope * sc.tol_scale))
          out.push_back(std::move(r));

  const std::vector<double> hs = {1e2, 1e3, 1e4};
  const std::vector<double> xls = chebyshev_points(0.3, 2.5, 12);
  const std::vector<int> ells = sc.full ? std::vector<int>{1, 2}
                                        : std::vector<int>{1};
  const int n_hi = sc.full ? 2 : 1;
  for (LimitPair pair : {LimitPair::J1toL2, LimitPair::J2toL1}) {
    const double g = pair == LimitPair::J1toL2 ? 1.0 : 1.5;
    for (int ell : ells)
      for (int n = 0; n <= n_hi; ++n)
        for (CheckReport& r : limit_check_family(
                 pair, ell, n, g, hs, xls, kTolSlope * sc.tol_scale))
          out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<CheckReport> spectrum_battery(BatteryScope sc) {
  const int n_grid = sc.full ? 4000 : 1200;
  std::vector<CheckReport> out;
  {
    const SystemSpec spec(Family::L2, 2, ParamSet::laguerre(1.5));
    for (CheckReport& r :
         spectrum_check(spec, {1e-3, 12.0, n_grid}, 4,
                        kTolSpectrumL * sc.tol_scale))
      out.push_back(std::move(r));
  }
  {
    const SystemSpec spec(Family::J1, 1, ParamSet::jacobi(1.0, 2.0));
    for (CheckReport& r :
         spectrum_check(spec, {1e-3, 0.5 * kPi - 1e-3, n_grid}, 3,
                        kTolSpectrumJ * sc.tol_scale))
      out.push_back(std::move(r));
  }
  return out;
}

/// which: one of ortho | eigen | shape | mirror | limit | spectrum | all.
inline std::vector<CheckReport> run_checks(const std::string& which,
                                           BatteryScope sc) {
  std::vector<CheckReport> out;
  auto append = [&](std::vector<CheckReport> v) {
    for (CheckReport& r : v) out.push_back(std::move(r));
  };
  const bool all = which == "all";
  if (all || which == "ortho") append(ortho_battery(sc));
  if (all || which == "eigen") append(eigen_battery(sc));
  if (all || which == "shape") append(shape_battery(sc));
  if (all || which == "mirror") append(mirror_battery(sc));
  if (all || which == "limit") append(limit_battery(sc));
  if (all || which == "spectrum") append(spectrum_battery(sc));
  return out;
}

}  // namespace xell
