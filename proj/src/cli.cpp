#include "dirichlet/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dirichlet/boundary_approx.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/kernels.hpp"
#include "dirichlet/verify.hpp"

namespace dirichlet::cli {
namespace {

using nlohmann::json;

std::string number_text(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

json pair_of(complex c) { return json::array({c.real(), c.imag()}); }

// "re" or "re,im".
complex parse_point(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const std::string re_text = text.substr(0, comma);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    if (comma == std::string::npos) return {re, 0.0};
    const std::string im_text = text.substr(comma + 1);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::exception&) {
    throw ParseError("expected a point 're' or 're,im', got '" + text + "'");
  }
}

int default_quad_nodes() {
  const char* env = std::getenv("DIRICHLET_QUAD_M");
  if (env == nullptr || *env == '\0') return QuadratureSpec::kDefaultNodes;
  int m = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), m);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("DIRICHLET_QUAD_M must be an integer, got '" + std::string(text) + "'");
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BoundaryFunction load_boundary(const std::string& spec, const std::string& csv_path) {
  if (!csv_path.empty()) return parse_boundary_csv(read_file(csv_path), csv_path);
  if (spec.empty()) throw ParseError("boundary data needs --data <spec> or --csv <file>");
  return parse_boundary_spec(spec);
}

// poly:<x,y>, zpoly:<z,zb>, disc:<x,y> (harmonic extension into the unit
// disc) or ellipse:<r>;<q> (harmonic extension into {r < 0}).
Evaluator load_evaluator(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("function spec needs a prefix: '" + spec + "'");
  const std::string head = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (head == "poly") return Evaluator::of(parse_real_poly(body));
  if (head == "zpoly") return Evaluator::of(parse_zzbar_poly(body));
  if (head == "disc") return Evaluator::of(solve_disc(parse_real_poly(body)));
  if (head == "ellipse") {
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw ParseError("ellipse spec is 'ellipse:<r>;<q>'");
    const EllipseDomain dom = validate_domain(parse_real_poly(body.substr(0, semi)));
    return Evaluator::of(solve_ellipse(dom, parse_real_poly(body.substr(semi + 1))).u);
  }
  throw ParseError("unknown function spec '" + spec + "'");
}

json goursat_json(const GoursatTrace& t) {
  json levels = json::array();
  for (const auto& l : t.levels) {
    levels.push_back({{"center", pair_of(l.square.center)},
                      {"side", l.square.side},
                      {"integral", pair_of(l.integral)},
                      {"modulus", l.modulus},
                      {"bound_holds", l.bound_holds}});
  }
  return {{"initial_integral", pair_of(t.initial_integral)},
          {"analytic", t.analytic},
          {"levels", levels},
          {"limit_point", pair_of(t.limit_point)}};
}

struct Options {
  int quad_m = QuadratureSpec::kDefaultNodes;
  std::string output;

  std::string data;
  std::string csv;
  std::string r_text;
  std::string q_text;
  std::vector<std::string> points;

  int deg1d = 64;
  double eps = 0.1;
  int cutoff_deg = 64;

  std::string check;
  std::string u_spec;
  std::string f_text;
  std::string a_text = "0";
  double radius = 0.5;
  std::string lo_text;
  std::string hi_text;
  std::string center_text = "0.5,0.5";
  double side = 1.0;
  int depth = 6;
  int edge_order = kDefaultEdgeOrder;
  int grid = 101;
  double h = kDefaultFdStep;
  std::optional<double> tol;

  int resolution = 64;
};

struct Outcome {
  std::string text;  // JSON or CSV, newline-terminated
  int code = kExitOk;
};

Outcome dump(const json& j, int code = kExitOk) { return {j.dump(2) + "\n", code}; }

Outcome run_verify(const Options& o, const QuadratureSpec& quad) {
  json result{{"check", o.check}};
  bool ok = false;
  double residual = 0.0;
  auto tol_or = [&o](double fallback) { return o.tol.value_or(fallback); };

  if (o.check == "green") {
    if (o.f_text.empty()) throw ParseError("green check needs --f <z,zb polynomial>");
    residual = green_residual_disc(parse_zzbar_poly(o.f_text), quad);
    ok = residual <= tol_or(1e-11);
  } else {
    if (o.u_spec.empty()) throw ParseError("check '" + o.check + "' needs --u <function spec>");
    const Evaluator u = load_evaluator(o.u_spec);
    if (o.check == "averaging") {
      residual = check_averaging(u, parse_point(o.a_text), o.radius, quad);
      ok = residual <= tol_or(1e-10);
    } else if (o.check == "max-principle") {
      const auto report = check_max_principle(u, o.grid, tol_or(1e-9));
      residual = report.interior_max - report.boundary_max;
      ok = report.ok;
      result["trace"] = {{"interior_max", report.interior_max},
                         {"boundary_max", report.boundary_max},
                         {"interior_min", report.interior_min},
                         {"boundary_min", report.boundary_min}};
    } else if (o.check == "fd-laplacian") {
      residual = std::abs(fd_laplacian(u, parse_point(o.a_text), o.h));
      ok = residual <= tol_or(1e-5);
    } else if (o.check == "contour-circle") {
      const complex value = contour_integral_circle(u, parse_point(o.a_text), o.radius, quad);
      residual = std::abs(value);
      ok = residual <= tol_or(1e-11);
      result["trace"] = {{"integral", pair_of(value)}};
    } else if (o.check == "contour-rect") {
      const Rect rect{parse_point(o.lo_text), parse_point(o.hi_text)};
      const complex value = contour_integral_rect(u, rect, o.edge_order);
      residual = std::abs(value);
      ok = residual <= tol_or(1e-11);
      result["trace"] = {{"integral", pair_of(value)}};
    } else if (o.check == "contour-bound") {
      Curve curve = Circle{parse_point(o.a_text), o.radius};
      if (!o.lo_text.empty() || !o.hi_text.empty()) {
        curve = Rect{parse_point(o.lo_text), parse_point(o.hi_text)};
      }
      const ContourBound bound = contour_length_bound_check(u, curve, quad);
      residual = bound.lhs - bound.rhs;
      ok = bound.ok();
      result["trace"] = {{"lhs", bound.lhs}, {"rhs", bound.rhs}};
    } else if (o.check == "goursat") {
      const GoursatTrace trace =
          goursat_localize(u, Square{parse_point(o.center_text), o.side}, o.depth, o.edge_order);
      residual = std::abs(trace.initial_integral);
      ok = trace.all_bounds_hold();
      result["trace"] = goursat_json(trace);
    } else {
      throw ParseError("unknown check '" + o.check + "'");
    }
  }
  result["residual"] = residual;
  result["ok"] = ok;
  return dump(result, ok ? kExitOk : kExitCheckFailed);
}

Outcome dispatch(const CLI::App& app, const Options& o) {
  const QuadratureSpec quad(o.quad_m);
  if (app.got_subcommand("solve-disc")) {
    return dump(to_json(solve_disc(parse_real_poly(o.data))));
  }
  if (app.got_subcommand("solve-ellipse")) {
    const EllipseDomain dom = validate_domain(parse_real_poly(o.r_text));
    return dump(to_json(solve_ellipse(dom, parse_real_poly(o.q_text))));
  }
  if (app.got_subcommand("poisson-eval")) {
    const BoundaryFunction phi = load_boundary(o.data, o.csv);
    json pts = json::array();
    for (const auto& text : o.points) {
      const complex z = parse_point(text);
      pts.push_back({{"z", pair_of(z)},
                     {"u", poisson_integral(phi, z, quad)},
                     {"h", pair_of(analytic_part(phi, z, quad))}});
    }
    return dump({{"data", phi.label()}, {"a0", pair_of(circle_average(phi, quad))}, {"points", pts}});
  }
  if (app.got_subcommand("cauchy-eval")) {
    const BoundaryFunction f = load_boundary(o.data, o.csv);
    json pts = json::array();
    for (const auto& text : o.points) {
      const complex z = parse_point(text);
      pts.push_back({{"z", pair_of(z)}, {"value", pair_of(cauchy_integral(f, z, quad))}});
    }
    return dump({{"data", f.label()}, {"points", pts}});
  }
  if (app.got_subcommand("approx-circle")) {
    const BoundaryFunction phi = load_boundary(o.data, o.csv);
    const CircleApprox approx = circle_polynomial_approx(phi, ApproxPlan{o.deg1d, o.eps, o.cutoff_deg});
    return dump({{"p", to_string(approx.p)}, {"sup_error", approx.sup_error}});
  }
  if (app.got_subcommand("verify")) return run_verify(o, quad);
  if (app.got_subcommand("grid-export")) {
    if (o.resolution < 2) throw DomainViolation("grid resolution must be at least 2");
    if (!o.r_text.empty()) {
      const EllipseDomain dom = validate_domain(parse_real_poly(o.r_text));
      return {grid_export(solve_ellipse(dom, parse_real_poly(o.q_text)).u, dom, o.resolution)};
    }
    return {grid_export(solve_disc(parse_real_poly(o.data)), o.resolution)};
  }
  throw ParseError("no subcommand given");
}

template <class Value>
std::string lattice_rows(int n, complex lo, complex hi, Value value) {
  std::string out;
  for (int j = 0; j < n; ++j) {
    const double y = lo.imag() + (hi.imag() - lo.imag()) * (2.0 * j + 1.0) / (2.0 * n);
    for (int i = 0; i < n; ++i) {
      const double x = lo.real() + (hi.real() - lo.real()) * (2.0 * i + 1.0) / (2.0 * n);
      if (const auto v = value(complex(x, y))) {
        out += number_text(x) + "," + number_text(y) + "," + number_text(*v) + "\n";
      }
    }
  }
  return out;
}

}  // namespace

std::string grid_export(const HarmonicRep& rep, int n) {
  return lattice_rows(n, complex(-1.0, -1.0), complex(1.0, 1.0), [&rep](complex z) -> std::optional<double> {
    if (std::norm(z) > 1.0) return std::nullopt;
    return eval_harmonic(rep, z).real();
  });
}

std::string grid_export(const RealPoly2& u, const EllipseDomain& dom, int n) {
  const complex half(dom.semi_major(), dom.semi_major());
  return lattice_rows(n, dom.center() - half, dom.center() + half,
                      [&](complex z) -> std::optional<double> {
                        if (eval(dom.defining_polynomial(), z) > 0.0) return std::nullopt;
                        return eval(u, z);
                      });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dirichlet problem on the disc and ellipses: exact polynomial solves, Poisson and "
               "Cauchy integrals, and numerical checks",
               "dirichlet"};
  app.require_subcommand(1);
  app.add_option("--quad-m", o.quad_m, "trapezoid nodes on the circle (env DIRICHLET_QUAD_M)");
  app.add_option("-o,--output", o.output, "write the result to a file instead of stdout");

  auto* disc = app.add_subcommand("solve-disc", "harmonic extension of polynomial data on the unit circle");
  disc->add_option("--data", o.data, "polynomial in x, y")->required();

  auto* ellipse = app.add_subcommand("solve-ellipse", "Dirichlet solve on {r < 0} for polynomial data q");
  ellipse->add_option("--r", o.r_text, "degree-two defining polynomial")->required();
  ellipse->add_option("--q", o.q_text, "boundary data polynomial")->required();

  for (const char* name : {"poisson-eval", "cauchy-eval"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "poisson-eval"
                                             ? "Poisson integral and its analytic part"
                                             : "Cauchy integral of boundary data");
    sub->add_option("--data", o.data, "const:c | cos:k | sin:k | abs_sin | poly:<x,y> | zpoly:<z,zb>");
    sub->add_option("--csv", o.csv, "sampled data, rows theta,value[,imag]");
    sub->add_option("--z", o.points, "evaluation point re,im (repeatable)")->required();
  }

  auto* approx = app.add_subcommand("approx-circle", "polynomial approximation of circle data");
  approx->add_option("--data", o.data, "boundary function spec");
  approx->add_option("--csv", o.csv, "sampled data, rows theta,value");
  approx->add_option("--deg1d", o.deg1d, "Bernstein degree for the arc functions");
  approx->add_option("--eps", o.eps, "cutoff half-width");
  approx->add_option("--cutoff-deg", o.cutoff_deg, "Bernstein degree for the cutoff");

  auto* verify = app.add_subcommand("verify", "numerical property check");
  verify->add_option("--check", o.check,
                     "averaging | max-principle | fd-laplacian | contour-circle | contour-rect | "
                     "contour-bound | goursat | green")
      ->required();
  verify->add_option("--u", o.u_spec, "poly:<x,y> | zpoly:<z,zb> | disc:<x,y> | ellipse:<r>;<q>");
  verify->add_option("--f", o.f_text, "z,zb polynomial for the green check");
  verify->add_option("--a", o.a_text, "center or evaluation point re,im");
  verify->add_option("--r", o.radius, "circle radius");
  verify->add_option("--lo", o.lo_text, "rectangle lower-left corner");
  verify->add_option("--hi", o.hi_text, "rectangle upper-right corner");
  verify->add_option("--center", o.center_text, "Goursat square center");
  verify->add_option("--side", o.side, "Goursat square side");
  verify->add_option("--depth", o.depth, "Goursat depth");
  verify->add_option("--edge-order", o.edge_order, "Gauss-Legendre points per edge");
  verify->add_option("--grid", o.grid, "max-principle lattice size");
  verify->add_option("--step", o.h, "finite-difference step");
  verify->add_option("--tol", o.tol, "pass threshold (defaults per check)");

  auto* grid = app.add_subcommand("grid-export", "CSV lattice x,y,value of a solution");
  grid->add_option("--data", o.data, "disc boundary polynomial");
  grid->add_option("--r", o.r_text, "ellipse defining polynomial");
  grid->add_option("--q", o.q_text, "ellipse boundary polynomial");
  grid->add_option("--n", o.resolution, "lattice points per side");

  try {
    o.quad_m = default_quad_nodes();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << json{{"error", "UsageError"}, {"message", e.what()}}.dump(2) << "\n";
    err << app.help();
    return kExitError;
  } catch (const Error& e) {
    out << json{{"error", e.kind()}, {"message", e.what()}}.dump(2) << "\n";
    return kExitError;
  }

  try {
    const Outcome result = dispatch(app, o);
    if (o.output.empty()) {
      out << result.text;
    } else {
      std::ofstream file(o.output);
      if (!file) throw ParseError("cannot write '" + o.output + "'");
      file << result.text;
    }
    return result.code;
  } catch (const Error& e) {
    out << json{{"error", e.kind()}, {"message", e.what()}}.dump(2) << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    out << json{{"error", "InternalError"}, {"message", e.what()}}.dump(2) << "\n";
    return kExitError;
  }
}

}  // namespace dirichlet::cli
