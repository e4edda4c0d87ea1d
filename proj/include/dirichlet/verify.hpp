#pragma once

// Numerical checks of the defining properties of harmonic and analytic
// functions: the averaging property, the maximum principle, the 5-point
// Laplacian, contour integrals over circles and rectangles, the complex
// Green identity on the unit disc, the length-times-sup estimate, and
// Goursat's nested-square localization.

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "dirichlet/disc_solver.hpp"
#include "dirichlet/ellipse_solver.hpp"
#include "dirichlet/kernels.hpp"
#include "dirichlet/poly.hpp"

namespace dirichlet {

struct Disc {
  complex center;
  double radius = 1.0;
};

/// Axis-aligned rectangle with lower-left corner `lo` and upper-right `hi`.
struct Rect {
  complex lo;
  complex hi;

  double width() const { return hi.real() - lo.real(); }
  double height() const { return hi.imag() - lo.imag(); }
  double area() const { return width() * height(); }
};

struct Plane {};

using EvalDomain = std::variant<Plane, Disc, Rect>;

/// A complex function together with the closed set on which it may be
/// evaluated.  Checks throw DomainViolation when asked to sample outside it.
struct Evaluator {
  std::function<complex(complex)> f;
  EvalDomain domain = Plane{};

  complex operator()(complex z) const { return f(z); }

  static Evaluator of(const RealPoly2& p);
  static Evaluator of(const ComplexPolyZZbar& q);
  /// Restricted to the closed unit disc.
  static Evaluator of(const HarmonicRep& rep);
};

/// |u(a) - (1/M) sum_j u(a + r e^{i theta_j})|.
double check_averaging(const Evaluator& u, complex a, double r, const QuadratureSpec& quad = {});

/// Trapezoid rule for the integral of f dz over the counterclockwise circle |z - a| = r.
complex contour_integral_circle(const Evaluator& f, complex a, double r,
                                const QuadratureSpec& quad = {});

inline constexpr int kDefaultEdgeOrder = 16;

/// Counterclockwise boundary integral, Gauss-Legendre of `edge_order` points per edge.
complex contour_integral_rect(const Evaluator& f, const Rect& rect, int edge_order = kDefaultEdgeOrder);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int order);

/// |contour integral of f over the unit circle - 2i * area integral of
/// df/dzbar over the unit disc|, the area integral taken exactly from the
/// moments of z^n zbar^m.
double green_residual_disc(const ComplexPolyZZbar& f, const QuadratureSpec& quad = {});

/// Exact integral of q over the unit disc.
complex disc_area_integral(const ComplexPolyZZbar& q);

inline constexpr double kDefaultFdStep = 1e-4;

/// Real part of (u(z+h) + u(z-h) + u(z+ih) + u(z-ih) - 4u(z)) / h^2.
double fd_laplacian(const Evaluator& u, complex z, double h = kDefaultFdStep);

struct Circle {
  complex center;
  double radius = 1.0;
};
using Curve = std::variant<Circle, Rect>;

struct ContourBound {
  double lhs = 0.0;  // |integral of f dz|
  double rhs = 0.0;  // sampled sup |f| times curve length
  bool ok() const { return lhs <= rhs + 1e-10; }
};

ContourBound contour_length_bound_check(const Evaluator& f, const Curve& curve,
                                        const QuadratureSpec& quad = {});

struct Square {
  complex center;
  double side = 1.0;

  double area() const { return side * side; }
  Rect rect() const;
};

struct GoursatLevel {
  Square square;
  complex integral;
  double modulus = 0.0;
  /// |integral| >= |I| area(square) / area(initial square) - 1e-10.
  bool bound_holds = false;
};

struct GoursatTrace {
  Square initial;
  complex initial_integral;
  /// |I| <= 1e-12: no localization performed, `levels` is empty.
  bool analytic = false;
  std::vector<GoursatLevel> levels;
  complex limit_point;

  bool all_bounds_hold() const;
};

inline constexpr double kGoursatZeroTolerance = 1e-12;

/// Repeatedly quarters the square, keeping the quarter whose boundary
/// integral has the largest modulus (ties within 1e-12 relative broken in
/// the order NW, NE, SW, SE).
GoursatTrace goursat_localize(const Evaluator& f, const Square& square, int depth,
                              int edge_order = kDefaultEdgeOrder);

inline constexpr int kBoundarySamples = 720;

struct MaxPrincipleReport {
  double interior_max = 0.0;
  double boundary_max = 0.0;
  double interior_min = 0.0;
  double boundary_min = 0.0;
  bool ok = false;      // interior_max <= boundary_max + tolerance
  bool min_ok = false;  // interior_min >= boundary_min - tolerance
};

/// Real part of u on a grid_n x grid_n lattice of [-1, 1]^2 clipped to the
/// open unit disc, against 720 samples of the unit circle.
MaxPrincipleReport check_max_principle(const Evaluator& u, int grid_n, double tolerance = 1e-9);

/// Same on an ellipse: lattice over the bounding box clipped to {r < 0},
/// boundary sampled through the ellipse parametrization.
MaxPrincipleReport check_max_principle(const Evaluator& u, const EllipseDomain& dom, int grid_n,
                                       double tolerance = 1e-9);

}  // namespace dirichlet
