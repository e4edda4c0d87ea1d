#include "dirichlet/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "dirichlet/errors.hpp"

namespace dirichlet {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kContainSlack = 1e-12;

bool rect_contains(const Rect& outer, const Rect& inner) {
  return inner.lo.real() >= outer.lo.real() - kContainSlack &&
         inner.lo.imag() >= outer.lo.imag() - kContainSlack &&
         inner.hi.real() <= outer.hi.real() + kContainSlack &&
         inner.hi.imag() <= outer.hi.imag() + kContainSlack;
}

bool disc_contains_point(const Disc& d, complex z) {
  return std::abs(z - d.center) <= d.radius + kContainSlack;
}

// Whether the closed disc |z - a| <= r lies in the evaluator's domain.
bool domain_holds_disc(const EvalDomain& domain, complex a, double r) {
  return std::visit(
      [&](const auto& d) -> bool {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, Plane>) {
          return true;
        } else if constexpr (std::is_same_v<D, Disc>) {
          return std::abs(a - d.center) + r <= d.radius + kContainSlack;
        } else {
          return rect_contains(d, Rect{a - complex(r, r), a + complex(r, r)});
        }
      },
      domain);
}

bool domain_holds_rect(const EvalDomain& domain, const Rect& rect) {
  return std::visit(
      [&](const auto& d) -> bool {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, Plane>) {
          return true;
        } else if constexpr (std::is_same_v<D, Disc>) {
          const std::array<complex, 4> corners{rect.lo, complex(rect.hi.real(), rect.lo.imag()),
                                               rect.hi, complex(rect.lo.real(), rect.hi.imag())};
          return std::all_of(corners.begin(), corners.end(),
                             [&](complex c) { return disc_contains_point(d, c); });
        } else {
          return rect_contains(d, rect);
        }
      },
      domain);
}

void require_disc(const Evaluator& f, complex a, double r, const char* what) {
  if (!(r > 0.0)) throw DomainViolation(std::string(what) + ": radius must be positive");
  if (!domain_holds_disc(f.domain, a, r)) {
    throw DomainViolation(std::string(what) + ": disc leaves the function's domain");
  }
}

void require_rect(const Evaluator& f, const Rect& rect, const char* what) {
  if (!(rect.width() > 0.0 && rect.height() > 0.0)) {
    throw DomainViolation(std::string(what) + ": rectangle must have positive width and height");
  }
  if (!domain_holds_rect(f.domain, rect)) {
    throw DomainViolation(std::string(what) + ": rectangle leaves the function's domain");
  }
}

complex edge_integral(const Evaluator& f, complex from, complex to, const GaussLegendre& rule) {
  const complex mid = 0.5 * (from + to);
  const complex half = 0.5 * (to - from);
  complex sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  }
  return half * sum;
}

}  // namespace

Evaluator Evaluator::of(const RealPoly2& p) {
  return Evaluator{[p](complex z) { return complex(eval(p, z), 0.0); }, Plane{}};
}

Evaluator Evaluator::of(const ComplexPolyZZbar& q) {
  return Evaluator{[q](complex z) { return eval(q, z); }, Plane{}};
}

Evaluator Evaluator::of(const HarmonicRep& rep) {
  return Evaluator{[rep](complex z) { return eval_harmonic(rep, z); }, Disc{complex(0.0, 0.0), 1.0}};
}

double check_averaging(const Evaluator& u, complex a, double r, const QuadratureSpec& quad) {
  require_disc(u, a, r, "averaging check");
  const int m = quad.nodes();
  complex sum = 0.0;
  for (int j = 0; j < m; ++j) sum += u(a + std::polar(r, quad.node(j)));
  return std::abs(u(a) - sum / static_cast<double>(m));
}

complex contour_integral_circle(const Evaluator& f, complex a, double r, const QuadratureSpec& quad) {
  require_disc(f, a, r, "circle contour integral");
  const int m = quad.nodes();
  complex sum = 0.0;
  for (int j = 0; j < m; ++j) {
    const complex offset = std::polar(r, quad.node(j));
    sum += f(a + offset) * complex(0.0, 1.0) * offset;
  }
  return sum * quad.weight();
}

GaussLegendre gauss_legendre(int order) {
  if (order < 1) throw DomainViolation("Gauss-Legendre order must be at least 1");
  GaussLegendre rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(x) and its derivative.
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      const double pn = n == 1 ? x : p1;
      const double pn1 = n == 1 ? 1.0 : p0;
      dp = n * (x * pn - pn1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

complex contour_integral_rect(const Evaluator& f, const Rect& rect, int edge_order) {
  require_rect(f, rect, "rectangle contour integral");
  const GaussLegendre rule = gauss_legendre(edge_order);
  const complex a = rect.lo;
  const complex b(rect.hi.real(), rect.lo.imag());
  const complex c = rect.hi;
  const complex d(rect.lo.real(), rect.hi.imag());
  return edge_integral(f, a, b, rule) + edge_integral(f, b, c, rule) + edge_integral(f, c, d, rule) +
         edge_integral(f, d, a, rule);
}

complex disc_area_integral(const ComplexPolyZZbar& q) {
  complex sum = 0.0;
  for (const auto& [e, c] : q.terms()) {
    if (e.first == e.second) sum += c * (std::numbers::pi / (e.first + 1));
  }
  return sum;
}

double green_residual_disc(const ComplexPolyZZbar& f, const QuadratureSpec& quad) {
  const complex contour = contour_integral_circle(Evaluator::of(f), complex(0.0, 0.0), 1.0, quad);
  const complex area = disc_area_integral(wirtinger(f, Wirtinger::d_dzbar));
  return std::abs(contour - complex(0.0, 2.0) * area);
}

double fd_laplacian(const Evaluator& u, complex z, double h) {
  if (!(h > 0.0)) throw DomainViolation("finite-difference step must be positive");
  if (!domain_holds_disc(u.domain, z, h)) {
    throw DomainViolation("finite-difference stencil leaves the function's domain");
  }
  const complex ih(0.0, h);
  const complex sum = u(z + h) + u(z - h) + u(z + ih) + u(z - ih) - 4.0 * u(z);
  return sum.real() / (h * h);
}

ContourBound contour_length_bound_check(const Evaluator& f, const Curve& curve,
                                        const QuadratureSpec& quad) {
  ContourBound out;
  const int m = quad.nodes();
  double sup = 0.0;
  if (const auto* circle = std::get_if<Circle>(&curve)) {
    out.lhs = std::abs(contour_integral_circle(f, circle->center, circle->radius, quad));
    for (int j = 0; j < m; ++j) {
      sup = std::max(sup, std::abs(f(circle->center + std::polar(circle->radius, quad.node(j)))));
    }
    out.rhs = sup * kTwoPi * circle->radius;
  } else {
    const Rect& rect = std::get<Rect>(curve);
    out.lhs = std::abs(contour_integral_rect(f, rect));
    const std::array<complex, 5> corners{rect.lo, complex(rect.hi.real(), rect.lo.imag()), rect.hi,
                                         complex(rect.lo.real(), rect.hi.imag()), rect.lo};
    for (int e = 0; e < 4; ++e) {
      for (int j = 0; j <= m; ++j) {
        const double t = static_cast<double>(j) / m;
        sup = std::max(sup, std::abs(f(corners[e] + t * (corners[e + 1] - corners[e]))));
      }
    }
    out.rhs = sup * 2.0 * (rect.width() + rect.height());
  }
  return out;
}

Rect Square::rect() const {
  const complex half(0.5 * side, 0.5 * side);
  return Rect{center - half, center + half};
}

bool GoursatTrace::all_bounds_hold() const {
  return std::all_of(levels.begin(), levels.end(), [](const GoursatLevel& l) { return l.bound_holds; });
}

GoursatTrace goursat_localize(const Evaluator& f, const Square& square, int depth, int edge_order) {
  if (depth < 1) throw DomainViolation("Goursat depth must be at least 1");
  if (!(square.side > 0.0)) throw DomainViolation("square side must be positive");
  require_rect(f, square.rect(), "Goursat localization");

  GoursatTrace trace;
  trace.initial = square;
  trace.initial_integral = contour_integral_rect(f, square.rect(), edge_order);
  trace.limit_point = square.center;
  const double total = std::abs(trace.initial_integral);
  if (total <= kGoursatZeroTolerance) {
    trace.analytic = true;
    return trace;
  }

  // NW, NE, SW, SE
  const std::array<complex, 4> directions{complex(-1, 1), complex(1, 1), complex(-1, -1), complex(1, -1)};
  Square current = square;
  for (int level = 1; level <= depth; ++level) {
    const double side = 0.5 * current.side;
    GoursatLevel best{};
    best.modulus = -1.0;
    for (const complex dir : directions) {
      const Square sub{current.center + 0.25 * current.side * dir, side};
      const complex integral = contour_integral_rect(f, sub.rect(), edge_order);
      const double modulus = std::abs(integral);
      if (modulus > best.modulus * (1.0 + 1e-12) + 1e-300) {
        best = GoursatLevel{sub, integral, modulus, false};
      }
    }
    best.bound_holds = best.modulus >= total * best.square.area() / square.area() - 1e-10;
    trace.levels.push_back(best);
    current = best.square;
  }
  trace.limit_point = current.center;
  return trace;
}

namespace {

template <class Inside, class Boundary>
MaxPrincipleReport max_principle(const Evaluator& u, int grid_n, double tolerance, complex lo,
                                 complex hi, Inside inside, Boundary boundary) {
  if (grid_n < 2) throw DomainViolation("max-principle grid needs at least 2 points per side");
  MaxPrincipleReport r;
  r.interior_max = -std::numeric_limits<double>::infinity();
  r.interior_min = std::numeric_limits<double>::infinity();
  r.boundary_max = -std::numeric_limits<double>::infinity();
  r.boundary_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const complex z(lo.real() + (hi.real() - lo.real()) * i / (grid_n - 1),
                      lo.imag() + (hi.imag() - lo.imag()) * j / (grid_n - 1));
      if (!inside(z)) continue;
      const double v = u(z).real();
      r.interior_max = std::max(r.interior_max, v);
      r.interior_min = std::min(r.interior_min, v);
    }
  }
  for (int j = 0; j < kBoundarySamples; ++j) {
    const double v = u(boundary(kTwoPi * j / kBoundarySamples)).real();
    r.boundary_max = std::max(r.boundary_max, v);
    r.boundary_min = std::min(r.boundary_min, v);
  }
  r.ok = r.interior_max <= r.boundary_max + tolerance;
  r.min_ok = r.interior_min >= r.boundary_min - tolerance;
  return r;
}

}  // namespace

MaxPrincipleReport check_max_principle(const Evaluator& u, int grid_n, double tolerance) {
  return max_principle(
      u, grid_n, tolerance, complex(-1.0, -1.0), complex(1.0, 1.0),
      [](complex z) { return std::abs(z) < 1.0; }, [](double t) { return std::polar(1.0, t); });
}

MaxPrincipleReport check_max_principle(const Evaluator& u, const EllipseDomain& dom, int grid_n,
                                       double tolerance) {
  const double extent = dom.semi_major();
  const complex half(extent, extent);
  return max_principle(
      u, grid_n, tolerance, dom.center() - half, dom.center() + half,
      [&dom](complex z) { return dom.contains(z); },
      [&dom](double t) { return dom.boundary_point(t); });
}

}  // namespace dirichlet
