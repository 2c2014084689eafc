// Command-line surface: construction/evaluation of the exceptional-family
// polynomials and systems, plus the numerical verification battery.
// Output is newline-delimited JSON (sorted keys) or CSV with a header row.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xell/xell.hpp"

using nlohmann::json;
using namespace xell;

namespace {

struct FamilyArg {
  Family family;
  bool classical;  // "L" / "J" tags pin ell = 0
};

FamilyArg parse_family(const std::string& s) {
  if (s == "L") return {Family::L1, true};
  if (s == "J") return {Family::J1, true};
  if (s == "L1") return {Family::L1, false};
  if (s == "L2") return {Family::L2, false};
  if (s == "J1") return {Family::J1, false};
  if (s == "J2") return {Family::J2, false};
  throw InvalidParams("unknown family '" + s +
                      "' (expected L, J, L1, L2, J1 or J2)");
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Common scope flags shared by the subcommands.
struct Options {
  std::string family_str;
  int ell = 0;
  bool ell_given = false;
  int n = 0;
  double g = 0.0;
  std::optional<double> h;
  double x = 0.0;
  int n_max = 5;
  std::string format = "json";
  double tol_scale = 1.0;
  bool full = false;
  bool quick = false;
  std::string pair = "J1L2";
  bool targeted = false;  // any of ell/n/g/h given to `check`
};

ParamSet make_params(const FamilyArg& fa, const Options& o) {
  if (kind_of(fa.family) == Kind::Jacobi) {
    if (!o.h) throw InvalidParams("Jacobi families need --h");
    return ParamSet::jacobi(o.g, *o.h);
  }
  if (o.h) throw InvalidParams("Laguerre families take no --h");
  return ParamSet::laguerre(o.g);
}

int resolve_ell(const FamilyArg& fa, const Options& o) {
  if (fa.classical) {
    if (o.ell_given && o.ell != 0)
      throw InvalidParams("classical families L/J are ell = 0; use " +
                          std::string(kind_of(fa.family) == Kind::Laguerre
                                          ? "L1/L2"
                                          : "J1/J2") +
                          " for ell >= 1");
    return 0;
  }
  if (!o.ell_given || o.ell < 1)
    throw InvalidParams("deformed families need --ell >= 1");
  return o.ell;
}

void emit_json(const json& j) { std::cout << j.dump() << "\n"; }

void emit_csv_row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) std::cout << ",";
    std::cout << cells[i];
  }
  std::cout << "\n";
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// ---------------------------------------------------------------------------

int cmd_eval(const Options& o) {
  const FamilyArg fa = parse_family(o.family_str);
  const int ell = resolve_ell(fa, o);
  const ParamSet p = make_params(fa, o);
  const SystemSpec spec(fa.family, ell, p);

  // Closed-domain points are accepted; the polynomial value and the energy
  // are defined there, phi and U only on the open interior.
  const double e = eta(spec.kind(), o.x);  // throws DomainError outside
  const System sys(spec);
  const System::State st = sys.state(o.n);
  const double pval = st.xp.poly(e);
  const double en = st.energy;

  std::optional<double> phi, pot;
  const bool interior =
      o.x > 0.0 && (spec.kind() == Kind::Laguerre || o.x < 0.5 * kPi);
  if (interior) {
    phi = sys.phi(st, o.x);
    pot = sys.potential(o.x);
  }

  if (o.format == "json") {
    json j;
    j["family"] = o.family_str;
    j["ell"] = ell;
    j["n"] = o.n;
    j["g"] = o.g;
    if (o.h) j["h"] = *o.h;
    j["x"] = o.x;
    j["P"] = pval;
    j["phi"] = phi ? json(*phi) : json(nullptr);
    j["U"] = pot ? json(*pot) : json(nullptr);
    j["E"] = en;
    emit_json(j);
  } else {
    emit_csv_row({"family", "ell", "n", "g", "h", "x", "P", "phi", "U", "E"});
    emit_csv_row({o.family_str, std::to_string(ell), std::to_string(o.n),
                  fmt17(o.g), o.h ? fmt17(*o.h) : "", fmt17(o.x), fmt17(pval),
                  phi ? fmt17(*phi) : "", pot ? fmt17(*pot) : "", fmt17(en)});
  }
  return 0;
}

int cmd_coeffs(const Options& o) {
  const FamilyArg fa = parse_family(o.family_str);
  const int ell = resolve_ell(fa, o);
  const ParamSet p = make_params(fa, o);
  const XPolynomial xp = xpoly(fa.family, ell, o.n, p,
                               ell == 0 ? ParamCheck::relaxed
                                        : ParamCheck::strict);
  if (xp.poly.degree() != ell + o.n)
    throw Error("internal: degree mismatch");  // contract: deg = ell + n

  if (o.format == "json") {
    json j;
    j["family"] = o.family_str;
    j["ell"] = ell;
    j["n"] = o.n;
    j["g"] = o.g;
    if (o.h) j["h"] = *o.h;
    j["degree"] = xp.poly.degree();
    j["coeffs"] = xp.poly.coeffs();
    emit_json(j);
  } else {
    std::vector<std::string> head = {"family", "ell", "n", "g", "h", "degree"};
    std::vector<std::string> row = {o.family_str, std::to_string(ell),
                                    std::to_string(o.n), fmt17(o.g),
                                    o.h ? fmt17(*o.h) : "",
                                    std::to_string(xp.poly.degree())};
    for (int k = 0; k <= xp.poly.degree(); ++k) {
      head.push_back("c" + std::to_string(k));
      row.push_back(fmt17(xp.poly.coeff(k)));
    }
    emit_csv_row(head);
    emit_csv_row(row);
  }
  return 0;
}

int cmd_table(const Options& o) {
  const FamilyArg fa = parse_family(o.family_str);
  const int ell = resolve_ell(fa, o);
  const ParamSet p = make_params(fa, o);
  const SystemSpec spec(fa.family, ell, p);
  const GramResult gr = gram_matrix(spec, o.n_max);

  if (o.format == "csv")
    emit_csv_row({"family", "ell", "g", "h", "n", "E", "h_closed", "h_quad",
                  "rel_gap"});
  for (int n = 0; n <= o.n_max; ++n) {
    const double en = energy(fa.family, ell, n, p);
    const double closed = norm_closed(fa.family, ell, n, p,
                                      ell == 0 ? ParamCheck::relaxed
                                               : ParamCheck::strict);
    const double quad = gr.matrix[n][n];
    const double gap = std::abs(quad - closed) / closed;
    if (o.format == "json") {
      json j;
      j["family"] = o.family_str;
      j["ell"] = ell;
      j["g"] = o.g;
      if (o.h) j["h"] = *o.h;
      j["n"] = n;
      j["E"] = en;
      j["h_closed"] = closed;
      j["h_quad"] = quad;
      j["rel_gap"] = gap;
      emit_json(j);
    } else {
      emit_csv_row({o.family_str, std::to_string(ell), fmt17(o.g),
                    o.h ? fmt17(*o.h) : "", std::to_string(n), fmt17(en),
                    fmt17(closed), fmt17(quad), fmt17(gap)});
    }
  }
  return 0;
}

json report_to_json(const CheckReport& r) {
  json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["metric"] = r.metric;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  if (std::isfinite(r.slope)) j["slope"] = r.slope;
  if (!r.levels.empty()) j["levels"] = r.levels;
  return j;
}

int cmd_check(const std::string& which, const Options& o) {
  const BatteryScope sc{o.full, o.tol_scale};
  std::vector<CheckReport> reports;

  if (o.targeted && which == "mirror") {
    if (!o.h) throw InvalidParams("check mirror needs --g and --h");
    reports = mirror_check(o.ell, o.n, o.g, *o.h,
                           kTolMirror * sc.tol_scale,
                           kTolMirror * sc.tol_scale);
  } else if (o.targeted && which == "limit") {
    const LimitPair pair =
        o.pair == "J2L1" ? LimitPair::J2toL1 : LimitPair::J1toL2;
    reports = limit_check_family(pair, o.ell, o.n, o.g, {1e2, 1e3, 1e4},
                                 chebyshev_points(0.3, 2.5, 12),
                                 kTolSlope * sc.tol_scale);
  } else if (o.targeted &&
             (which == "ortho" || which == "eigen" || which == "shape")) {
    const FamilyArg fa = parse_family(o.family_str);
    const int ell = resolve_ell(fa, o);
    const SystemSpec spec(fa.family, ell, make_params(fa, o));
    if (which == "ortho") {
      reports = ortho_check(spec, o.n_max, kTolOrtho * sc.tol_scale);
      reports.push_back(sign_check(spec));
    } else if (which == "eigen") {
      reports.push_back(eigen_check(spec, 4, kTolEigen * sc.tol_scale));
      reports.push_back(
          annihilation_check(spec, kTolAnnihilation * sc.tol_scale));
    } else {
      reports.push_back(shape_check(spec, kTolShape * sc.tol_scale));
    }
  } else {
    reports = run_checks(which, sc);
  }

  int passed = 0, failed = 0;
  if (o.format == "csv")
    emit_csv_row({"check", "params", "metric", "tolerance", "slope", "pass"});
  for (const CheckReport& r : reports) {
    (r.pass ? passed : failed) += 1;
    if (o.format == "json") {
      emit_json(report_to_json(r));
    } else {
      emit_csv_row({csv_quote(r.check), csv_quote(r.params), fmt17(r.metric),
                    fmt17(r.tolerance),
                    std::isfinite(r.slope) ? fmt17(r.slope) : "",
                    r.pass ? "true" : "false"});
    }
  }
  if (o.format == "json") {
    json j;
    j["check"] = "summary";
    j["pass"] = passed;
    j["fail"] = failed;
    j["total"] = passed + failed;
    emit_json(j);
  } else {
    std::cerr << "summary: pass=" << passed << " fail=" << failed
              << " total=" << (passed + failed) << "\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exceptional (X_ell) Laguerre/Jacobi polynomial systems"};
  app.require_subcommand(1);
  // --h is a coupling constant here; keep help on --help only.
  app.set_help_flag("--help", "print help");

  Options o;
  if (const char* env = std::getenv("XELL_TOL_SCALE")) {
    try {
      o.tol_scale = std::stod(env);
    } catch (...) {
      std::cerr << "error: XELL_TOL_SCALE must be a real number\n";
      return 2;
    }
  }

  auto add_family_flags = [&](CLI::App* cmd, bool need_x) {
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--family", o.family_str, "L, J, L1, L2, J1 or J2")
        ->required();
    cmd->add_option("--ell", o.ell, "deformation degree")
        ->each([&](const std::string&) { o.ell_given = true; });
    cmd->add_option("--n", o.n, "state index (>= 0)");
    cmd->add_option("--g", o.g, "coupling g")->required();
    cmd->add_option("--h", [&](const std::vector<std::string>& v) {
      try {
        o.h = std::stod(v[0]);
      } catch (...) {
        return false;
      }
      return true;
    }, "coupling h (Jacobi kinds)");
    if (need_x) cmd->add_option("--x", o.x, "evaluation point")->required();
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate one state at x");
  add_family_flags(eval, true);

  CLI::App* coeffs =
      app.add_subcommand("coeffs", "coefficients of P_{ell,n} (ascending)");
  add_family_flags(coeffs, false);

  CLI::App* table =
      app.add_subcommand("table", "energy/norm table with quadrature gap");
  add_family_flags(table, false);
  table->add_option("--n-max", o.n_max, "last state index");

  CLI::App* check = app.add_subcommand("check", "run verification checks");
  check->set_help_flag("--help", "print help");
  std::string which = "all";
  check->add_option("which", which,
                    "ortho|eigen|shape|mirror|limit|spectrum|all")
      ->check(CLI::IsMember(
          {"ortho", "eigen", "shape", "mirror", "limit", "spectrum", "all"}));
  check->add_flag("--quick", o.quick, "small matrix (default)");
  check->add_flag("--full", o.full, "full acceptance matrix");
  check->add_option("--family", o.family_str, "target one system");
  check->add_option("--ell", o.ell, "target ell")
      ->each([&](const std::string&) {
        o.ell_given = true;
        o.targeted = true;
      });
  check->add_option("--n", o.n, "target n")
      ->each([&](const std::string&) { o.targeted = true; });
  check->add_option("--g", o.g, "target g")
      ->each([&](const std::string&) { o.targeted = true; });
  check->add_option("--h", [&](const std::vector<std::string>& v) {
    try {
      o.h = std::stod(v[0]);
    } catch (...) {
      return false;
    }
    o.targeted = true;
    return true;
  }, "target h");
  check->add_option("--pair", o.pair, "limit pair: J1L2 or J2L1")
      ->check(CLI::IsMember({"J1L2", "J2L1"}));
  check->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  check->add_option("--tol-scale", o.tol_scale,
                    "multiplier on all default tolerances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (eval->parsed()) return cmd_eval(o);
    if (coeffs->parsed()) return cmd_coeffs(o);
    if (table->parsed()) return cmd_table(o);
    if (check->parsed()) return cmd_check(which, o);
  } catch (const InvalidParams& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateRecurrence& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const ZeroDenominator& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const InvalidWeightParams& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const SingularXi& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const NoConvergence& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return 4;
  } catch (const GridTooCoarse& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
