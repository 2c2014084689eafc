#pragma once

#include <cmath>
#include <string>

#include "xell/classical.hpp"
#include "xell/errors.hpp"
#include "xell/polynomial.hpp"

namespace xell {

/// The four deformed systems. L1/L2 deform the radial oscillator (Laguerre
/// class), J1/J2 the trigonometric Darboux-Poschl-Teller potential (Jacobi
/// class). ell = 0 recovers the undeformed classical system for any tag.
enum class Family { L1, L2, J1, J2 };

/// Weight/coordinate class of a family.
enum class Kind { Laguerre, Jacobi };

inline Kind kind_of(Family f) {
  return (f == Family::L1 || f == Family::L2) ? Kind::Laguerre : Kind::Jacobi;
}

inline const char* to_string(Family f) {
  switch (f) {
    case Family::L1: return "L1";
    case Family::L2: return "L2";
    case Family::J1: return "J1";
    default: return "J2";
  }
}

/// Coupling constants. Laguerre kinds carry g with shift delta = 1; Jacobi
/// kinds carry (g, h) with delta = (1, 1).
struct ParamSet {
  Kind kind = Kind::Laguerre;
  double g = 0.0;
  double h = 0.0;  // Jacobi only

  static ParamSet laguerre(double g) { return {Kind::Laguerre, g, 0.0}; }
  static ParamSet jacobi(double g, double h) { return {Kind::Jacobi, g, h}; }

  // lambda + k*delta
  ParamSet shifted(int k) const {
    ParamSet p = *this;
    p.g += k;
    if (kind == Kind::Jacobi) p.h += k;
    return p;
  }
};

/// strict enforces the family ordering constraints; relaxed only positivity.
/// The relaxed mode exists for algebraic-identity checks (mirror images,
/// infinite-coupling limits) that evaluate a family outside its physical
/// parameter range.
enum class ParamCheck { strict, relaxed };

/// Throws InvalidParams naming the violated constraint. Constraints:
/// L1/L2: g > 0; J1: h > g > 0; J2: g > h > 0.
inline void validate_params(Family f, const ParamSet& p,
                            ParamCheck check = ParamCheck::strict) {
  const std::string fam = to_string(f);
  if (kind_of(f) != p.kind)
    throw InvalidParams(fam + ": parameter kind does not match family");
  if (!(p.g > 0.0)) throw InvalidParams(fam + ": requires g > 0");
  if (p.kind == Kind::Jacobi && !(p.h > 0.0))
    throw InvalidParams(fam + ": requires h > 0");
  if (check == ParamCheck::relaxed) return;
  if (f == Family::J1 && !(p.h > p.g))
    throw InvalidParams("J1: requires h > g > 0");
  if (f == Family::J2 && !(p.g > p.h))
    throw InvalidParams("J2: requires g > h > 0");
}

/// Deforming polynomial xi_ell of degree ell in the sinusoidal variable.
///   L1: L_ell^{(g+ell-3/2)}(-x)          L2: L_ell^{(-g-ell-1/2)}(x)
///   J1: P_ell^{(-g-ell-1/2, h+ell-3/2)}  J2: P_ell^{(g+ell-3/2, -h-ell-1/2)}
/// Conventions: xi_0 = 1 and xi_ell = 0 for ell < 0.
inline Polynomial xi(Family f, int ell, const ParamSet& p,
                     ParamCheck check = ParamCheck::strict) {
  if (ell < 0) return Polynomial::zero();
  validate_params(f, p, check);
  if (ell == 0) return Polynomial::constant(1.0);
  switch (f) {
    case Family::L1:
      return laguerre(ell, p.g + ell - 1.5).reflected();
    case Family::L2:
      return laguerre(ell, -p.g - ell - 0.5);
    case Family::J1:
      return jacobi(ell, -p.g - ell - 0.5, p.h + ell - 1.5);
    default:
      return jacobi(ell, p.g + ell - 1.5, -p.h - ell - 0.5);
  }
}

namespace detail {

inline void check_denominator(double d, const char* what) {
  if (std::abs(d) < 1e-12)
    throw ZeroDenominator(std::string("vanishing mixing denominator: ") + what);
}

}  // namespace detail

/// A member P_{ell,n} of an exceptional family, of degree ell+n in the
/// sinusoidal variable, together with the two mixing prefactors:
///   poly = part_a * base_n + part_b * base_nm1,
/// where base_n, base_nm1 are the classical polynomials at lambda+ell*delta.
struct XPolynomial {
  Family family = Family::L1;
  int ell = 0;
  int n = 0;
  ParamSet params;
  Polynomial poly;
  Polynomial part_a;
  Polynomial part_b;
  Polynomial base_n;
  Polynomial base_nm1;

  // Evaluate from the factor values instead of the combined coefficients.
  // Identical in exact arithmetic; far more accurate when the couplings are
  // large enough that the combined monomial form cancels.
  double value_via_parts(double x) const {
    return part_a(x) * base_n(x) + part_b(x) * base_nm1(x);
  }
};

/// Constructs P_{ell,n} for the given family. ell = 0 yields the classical
/// polynomial (part_a = 1, part_b = 0).
inline XPolynomial xpoly(Family f, int ell, int n, const ParamSet& p,
                         ParamCheck check = ParamCheck::strict) {
  if (ell < 0) throw InvalidParams("xpoly: ell must be >= 0");
  if (n < 0) throw InvalidParams("xpoly: n must be >= 0");
  validate_params(f, p, check);

  XPolynomial xp;
  xp.family = f;
  xp.ell = ell;
  xp.n = n;
  xp.params = p;

  const double g = p.g;
  const double h = p.h;

  switch (f) {
    case Family::L1: {
      xp.part_a = xi(f, ell, ParamSet::laguerre(g + 1), check);
      xp.part_b = -1.0 * xi(f, ell - 1, ParamSet::laguerre(g + 2), check);
      xp.base_n = laguerre(n, g + ell - 0.5);
      xp.base_nm1 = laguerre(n - 1, g + ell - 0.5);
      break;
    }
    case Family::L2: {
      xp.part_a = xi(f, ell, ParamSet::laguerre(g + 1), check);
      if (n >= 1 && ell >= 2) {
        detail::check_denominator(2 * g + 2 * n + 1, "2g+2n+1");
        xp.part_a -= (2.0 * n / (2 * g + 2 * n + 1)) *
                     xi(f, ell - 2, ParamSet::laguerre(g + 1), check);
      }
      if (ell >= 1) {
        detail::check_denominator(2 * g + 2 * n + 1, "2g+2n+1");
        xp.part_b = ((2 * g + 2 * n + 2 * ell - 1) / (2 * g + 2 * n + 1)) *
                    xi(f, ell - 1, ParamSet::laguerre(g), check);
      }
      xp.base_n = laguerre(n, g + ell - 0.5);
      xp.base_nm1 = laguerre(n - 1, g + ell - 0.5);
      break;
    }
    case Family::J1: {
      xp.part_a = xi(f, ell, ParamSet::jacobi(g + 1, h + 1), check);
      if (n >= 1 && ell >= 1) {
        detail::check_denominator(-g + h + 2 * ell - 2, "-g+h+2ell-2");
        detail::check_denominator(g + h + 2 * n + 2 * ell - 1,
                                  "g+h+2n+2ell-1");
        xp.part_a += (2.0 * n * (-g + h + ell - 1) /
                      ((-g + h + 2 * ell - 2) *
                       (g + h + 2 * n + 2 * ell - 1))) *
                     xi(f, ell - 1, ParamSet::jacobi(g, h + 2), check);
      }
      if (n >= 1 && ell >= 2) {
        detail::check_denominator(2 * g + 2 * n + 1, "2g+2n+1");
        detail::check_denominator(-g + h + 2 * ell - 2, "-g+h+2ell-2");
        xp.part_a -= (n * (2 * h + 4 * ell - 3) /
                      ((2 * g + 2 * n + 1) * (-g + h + 2 * ell - 2))) *
                     xi(f, ell - 2, ParamSet::jacobi(g + 1, h + 3), check);
      }
      if (ell >= 1) {
        detail::check_denominator(2 * g + 2 * n + 1, "2g+2n+1");
        detail::check_denominator(g + h + 2 * n + 2 * ell - 1,
                                  "g+h+2n+2ell-1");
        xp.part_b = ((-g + h + ell - 1) * (2 * g + 2 * n + 2 * ell - 1) /
                     ((2 * g + 2 * n + 1) * (g + h + 2 * n + 2 * ell - 1))) *
                    xi(f, ell - 1, ParamSet::jacobi(g, h + 2), check);
      }
      xp.base_n = jacobi(n, g + ell - 0.5, h + ell - 0.5);
      xp.base_nm1 = jacobi(n - 1, g + ell - 0.5, h + ell - 0.5);
      break;
    }
    default: {  // J2
      xp.part_a = xi(f, ell, ParamSet::jacobi(g + 1, h + 1), check);
      if (n >= 1 && ell >= 1) {
        detail::check_denominator(g - h + 2 * ell - 2, "g-h+2ell-2");
        detail::check_denominator(g + h + 2 * n + 2 * ell - 1,
                                  "g+h+2n+2ell-1");
        xp.part_a -= (2.0 * n * (g - h + ell - 1) /
                      ((g - h + 2 * ell - 2) *
                       (g + h + 2 * n + 2 * ell - 1))) *
                     xi(f, ell - 1, ParamSet::jacobi(g + 2, h), check);
      }
      if (n >= 1 && ell >= 2) {
        detail::check_denominator(2 * h + 2 * n + 1, "2h+2n+1");
        detail::check_denominator(g - h + 2 * ell - 2, "g-h+2ell-2");
        xp.part_a -= (n * (2 * g + 4 * ell - 3) /
                      ((2 * h + 2 * n + 1) * (g - h + 2 * ell - 2))) *
                     xi(f, ell - 2, ParamSet::jacobi(g + 3, h + 1), check);
      }
      if (ell >= 1) {
        detail::check_denominator(2 * h + 2 * n + 1, "2h+2n+1");
        detail::check_denominator(g + h + 2 * n + 2 * ell - 1,
                                  "g+h+2n+2ell-1");
        xp.part_b = ((g - h + ell - 1) * (2 * h + 2 * n + 2 * ell - 1) /
                     ((2 * h + 2 * n + 1) * (g + h + 2 * n + 2 * ell - 1))) *
                    xi(f, ell - 1, ParamSet::jacobi(g + 2, h), check);
      }
      xp.base_n = jacobi(n, g + ell - 0.5, h + ell - 0.5);
      xp.base_nm1 = jacobi(n - 1, g + ell - 0.5, h + ell - 0.5);
      break;
    }
  }

  xp.poly = xp.part_a * xp.base_n + xp.part_b * xp.base_nm1;
  return xp;
}

/// Classical norms: h_n^L(g) = Gamma(n+g+1/2) / (2 n!),
/// h_n^J(g,h) = Gamma(n+g+1/2) Gamma(n+h+1/2) / (2 n! (2n+g+h) Gamma(n+g+h)).
inline double classical_norm(Kind k, int n, double g, double h = 0.0) {
  double nfact = std::tgamma(n + 1.0);
  if (k == Kind::Laguerre) return std::tgamma(n + g + 0.5) / (2.0 * nfact);
  return std::tgamma(n + g + 0.5) * std::tgamma(n + h + 0.5) /
         (2.0 * nfact * (2.0 * n + g + h) * std::tgamma(n + g + h));
}

/// Closed-form squared norm h_{ell,n} of the orthogonality integral.
/// At ell = 0 every formula reduces to the classical norm.
inline double norm_closed(Family f, int ell, int n, const ParamSet& p,
                          ParamCheck check = ParamCheck::strict) {
  validate_params(f, p, check);
  if (ell < 0 || n < 0) throw InvalidParams("norm_closed: ell, n must be >= 0");
  const double g = p.g;
  const double h = p.h;
  switch (f) {
    case Family::L1:
      return (n + g + 2 * ell - 0.5) / (n + g + ell - 0.5) *
             classical_norm(Kind::Laguerre, n, g + ell);
    case Family::L2:
      return (n + g + ell + 0.5) / (n + g + 0.5) *
             classical_norm(Kind::Laguerre, n, g + ell);
    case Family::J1:
      return (n + g + ell + 0.5) * (n + h + 2 * ell - 0.5) /
             ((n + g + 0.5) * (n + h + ell - 0.5)) *
             classical_norm(Kind::Jacobi, n, g + ell, h + ell);
    default:  // J2
      return (n + h + ell + 0.5) * (n + g + 2 * ell - 0.5) /
             ((n + h + 0.5) * (n + g + ell - 0.5)) *
             classical_norm(Kind::Jacobi, n, g + ell, h + ell);
  }
}

/// Eigenvalue of the ell-deformed Hamiltonian: E_n at lambda + ell*delta.
/// Laguerre kinds: 4n (coupling independent); Jacobi: 4n(n+g+h+2*ell).
inline double energy(Family f, int ell, int n, const ParamSet& p) {
  if (kind_of(f) == Kind::Laguerre) return 4.0 * n;
  return 4.0 * n * (n + p.g + p.h + 2.0 * ell);
}

}  // namespace xell
