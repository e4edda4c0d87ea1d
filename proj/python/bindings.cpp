#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dirichlet/boundary_approx.hpp"
#include "dirichlet/cli.hpp"
#include "dirichlet/disc_solver.hpp"
#include "dirichlet/ellipse_solver.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/kernels.hpp"
#include "dirichlet/verify.hpp"

namespace py = pybind11;
using namespace dirichlet;

namespace {

QuadratureSpec quad_of(int nodes) { return QuadratureSpec(nodes); }

Evaluator evaluator_of(const py::object& f) {
  if (py::isinstance<RealPoly2>(f)) return Evaluator::of(f.cast<RealPoly2>());
  if (py::isinstance<ComplexPolyZZbar>(f)) return Evaluator::of(f.cast<ComplexPolyZZbar>());
  if (py::isinstance<HarmonicRep>(f)) return Evaluator::of(f.cast<HarmonicRep>());
  auto fn = f.cast<std::function<complex(complex)>>();
  return Evaluator{std::move(fn)};
}

BoundaryFunction boundary_of(const py::object& data) {
  if (py::isinstance<BoundaryFunction>(data)) return data.cast<BoundaryFunction>();
  if (py::isinstance<RealPoly2>(data)) return BoundaryFunction::trace(data.cast<RealPoly2>());
  if (py::isinstance<ComplexPolyZZbar>(data)) return BoundaryFunction::trace(data.cast<ComplexPolyZZbar>());
  return parse_boundary_spec(data.cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_dirichlet, m) {
  m.doc() = "Dirichlet problem on the unit disc and on ellipses";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NonRealPolynomial>(m, "NonRealPolynomial", base.ptr());
  py::register_exception<DomainViolation>(m, "DomainViolation", base.ptr());
  py::register_exception<OutsideDomain>(m, "OutsideDomain", base.ptr());
  py::register_exception<NotDegreeTwo>(m, "NotDegreeTwo", base.ptr());
  py::register_exception<UnboundedDomain>(m, "UnboundedDomain", base.ptr());
  py::register_exception<EmptyInterior>(m, "EmptyInterior", base.ptr());
  py::register_exception<SingularSystem>(m, "SingularSystem", base.ptr());
  py::register_exception<ShiftRequired>(m, "ShiftRequired", base.ptr());

  py::class_<RealPoly2>(m, "RealPoly2")
      .def(py::init([](const std::string& text) { return parse_real_poly(text); }), py::arg("text") = "0")
      .def("__str__", [](const RealPoly2& p) { return to_string(p); })
      .def("__repr__", [](const RealPoly2& p) { return "RealPoly2('" + to_string(p) + "')"; })
      .def("__call__", [](const RealPoly2& p, complex z) { return eval(p, z); })
      .def("coefficient", &RealPoly2::coefficient)
      .def_property_readonly("degree", &RealPoly2::degree)
      .def("terms",
           [](const RealPoly2& p) {
             std::vector<std::tuple<int, int, double>> out;
             for (const auto& [e, c] : p.terms()) out.emplace_back(e.first, e.second, c);
             return out;
           })
      .def("laplacian", [](const RealPoly2& p) { return laplacian(p); })
      .def("to_zzbar", [](const RealPoly2& p) { return to_zzbar(p); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(double() * py::self)
      .def(py::self == py::self);

  py::class_<ComplexPolyZZbar>(m, "ComplexPolyZZbar")
      .def(py::init([](const std::string& text) { return parse_zzbar_poly(text); }), py::arg("text") = "0")
      .def("__str__", [](const ComplexPolyZZbar& q) { return to_string(q); })
      .def("__repr__", [](const ComplexPolyZZbar& q) { return "ComplexPolyZZbar('" + to_string(q) + "')"; })
      .def("__call__", [](const ComplexPolyZZbar& q, complex z) { return eval(q, z); })
      .def("coefficient", &ComplexPolyZZbar::coefficient)
      .def_property_readonly("degree", &ComplexPolyZZbar::degree)
      .def("d_dz", [](const ComplexPolyZZbar& q) { return wirtinger(q, Wirtinger::d_dz); })
      .def("d_dzbar", [](const ComplexPolyZZbar& q) { return wirtinger(q, Wirtinger::d_dzbar); })
      .def("is_analytic", [](const ComplexPolyZZbar& q) { return is_analytic(q); })
      .def("to_real", [](const ComplexPolyZZbar& q) { return from_zzbar(q); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self);

  py::class_<HarmonicRep>(m, "HarmonicRep")
      .def_readonly("a0", &HarmonicRep::a0)
      .def_readonly("analytic", &HarmonicRep::analytic)
      .def_readonly("antianalytic", &HarmonicRep::antianalytic)
      .def_readonly("real_valued", &HarmonicRep::real_valued)
      .def("__call__", [](const HarmonicRep& rep, complex z) { return eval_harmonic(rep, z); })
      .def("to_zzbar", [](const HarmonicRep& rep) { return to_zzbar(rep); })
      .def("to_json", [](const HarmonicRep& rep) { return to_json(rep).dump(); })
      .def_static("from_json",
                  [](const std::string& text) { return harmonic_rep_from_json(nlohmann::json::parse(text)); });

  m.def("reduce_on_circle", &reduce_on_circle, py::arg("q"));
  m.def("solve_disc", &solve_disc, py::arg("boundary"));

  py::class_<EllipseDomain>(m, "EllipseDomain")
      .def(py::init([](const RealPoly2& r) { return validate_domain(r); }), py::arg("r"))
      .def_property_readonly("center", &EllipseDomain::center)
      .def_property_readonly("semi_major", &EllipseDomain::semi_major)
      .def_property_readonly("semi_minor", &EllipseDomain::semi_minor)
      .def_property_readonly("major_angle", &EllipseDomain::major_angle)
      .def("boundary_point", &EllipseDomain::boundary_point)
      .def("contains", &EllipseDomain::contains);

  py::class_<EllipseSolution>(m, "EllipseSolution")
      .def_readonly("u", &EllipseSolution::u)
      .def_readonly("p", &EllipseSolution::p)
      .def_readonly("residual_laplacian_max", &EllipseSolution::residual_laplacian_max)
      .def_readonly("condition_estimate", &EllipseSolution::condition_estimate);
  m.def("solve_ellipse", &solve_ellipse, py::arg("domain"), py::arg("q"));

  py::class_<BoundaryFunction>(m, "BoundaryFunction")
      .def(py::init([](const std::string& spec) { return parse_boundary_spec(spec); }), py::arg("spec"))
      .def_static("from_csv", &parse_boundary_csv, py::arg("text"), py::arg("label") = "csv")
      .def_property_readonly("label", &BoundaryFunction::label)
      .def("__call__", &BoundaryFunction::operator());

  py::enum_<KernelForm>(m, "KernelForm")
      .value("series_closed", KernelForm::series_closed)
      .value("herglotz_re", KernelForm::herglotz_re)
      .value("modulus_sq", KernelForm::modulus_sq);

  const int M = QuadratureSpec::kDefaultNodes;
  m.def("poisson_kernel", &poisson_kernel, py::arg("z"), py::arg("w"), py::arg("form") = KernelForm::modulus_sq);
  m.def("poisson_kernel_truncated", &poisson_kernel_truncated, py::arg("z"), py::arg("w"), py::arg("order"));
  m.def("truncation_error_bound", &truncation_error_bound, py::arg("rho"), py::arg("order"));
  m.def(
      "choose_truncation",
      [](double rho, double eps) {
        const KernelTruncation t = choose_truncation(rho, eps);
        return py::make_tuple(t.order, t.bound);
      },
      py::arg("rho"), py::arg("eps"));
  m.def(
      "poisson_integral",
      [](const py::object& data, complex z, int nodes) { return poisson_integral(boundary_of(data), z, quad_of(nodes)); },
      py::arg("data"), py::arg("z"), py::arg("nodes") = M);
  m.def(
      "analytic_part",
      [](const py::object& data, complex z, int nodes) { return analytic_part(boundary_of(data), z, quad_of(nodes)); },
      py::arg("data"), py::arg("z"), py::arg("nodes") = M);
  m.def(
      "cauchy_integral",
      [](const py::object& data, complex z, int nodes) { return cauchy_integral(boundary_of(data), z, quad_of(nodes)); },
      py::arg("data"), py::arg("z"), py::arg("nodes") = M);

  m.def(
      "circle_polynomial_approx",
      [](const py::object& data, int degree_1d, double epsilon, int cutoff_degree) {
        const CircleApprox a = circle_polynomial_approx(boundary_of(data), ApproxPlan{degree_1d, epsilon, cutoff_degree});
        return py::make_tuple(a.p, a.sup_error);
      },
      py::arg("data"), py::arg("degree_1d") = 64, py::arg("epsilon") = 0.1, py::arg("cutoff_degree") = 64);

  m.def(
      "check_averaging",
      [](const py::object& u, complex a, double r, int nodes) {
        return check_averaging(evaluator_of(u), a, r, quad_of(nodes));
      },
      py::arg("u"), py::arg("a"), py::arg("r"), py::arg("nodes") = M);
  m.def(
      "contour_integral_circle",
      [](const py::object& f, complex a, double r, int nodes) {
        return contour_integral_circle(evaluator_of(f), a, r, quad_of(nodes));
      },
      py::arg("f"), py::arg("a"), py::arg("r"), py::arg("nodes") = M);
  m.def(
      "contour_integral_rect",
      [](const py::object& f, complex lo, complex hi, int edge_order) {
        return contour_integral_rect(evaluator_of(f), Rect{lo, hi}, edge_order);
      },
      py::arg("f"), py::arg("lo"), py::arg("hi"), py::arg("edge_order") = kDefaultEdgeOrder);
  m.def(
      "green_residual_disc", [](const ComplexPolyZZbar& f, int nodes) { return green_residual_disc(f, quad_of(nodes)); },
      py::arg("f"), py::arg("nodes") = M);
  m.def(
      "fd_laplacian", [](const py::object& u, complex z, double h) { return fd_laplacian(evaluator_of(u), z, h); },
      py::arg("u"), py::arg("z"), py::arg("h") = kDefaultFdStep);
  m.def(
      "check_max_principle",
      [](const py::object& u, int grid_n, double tolerance) {
        const MaxPrincipleReport r = check_max_principle(evaluator_of(u), grid_n, tolerance);
        return py::dict(py::arg("interior_max") = r.interior_max, py::arg("boundary_max") = r.boundary_max,
                        py::arg("interior_min") = r.interior_min, py::arg("boundary_min") = r.boundary_min,
                        py::arg("ok") = r.ok, py::arg("min_ok") = r.min_ok);
      },
      py::arg("u"), py::arg("grid_n") = 101, py::arg("tolerance") = 1e-9);
  m.def(
      "goursat_localize",
      [](const py::object& f, complex center, double side, int depth) {
        const GoursatTrace t = goursat_localize(evaluator_of(f), Square{center, side}, depth);
        py::list levels;
        for (const auto& l : t.levels) {
          levels.append(py::dict(py::arg("center") = l.square.center, py::arg("side") = l.square.side,
                                 py::arg("integral") = l.integral, py::arg("bound_holds") = l.bound_holds));
        }
        return py::dict(py::arg("initial_integral") = t.initial_integral, py::arg("analytic") = t.analytic,
                        py::arg("levels") = levels, py::arg("limit_point") = t.limit_point);
      },
      py::arg("f"), py::arg("center"), py::arg("side"), py::arg("depth"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str());
      },
      py::arg("args"));
}
