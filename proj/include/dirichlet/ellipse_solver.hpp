#pragma once

#include <array>

#include <nlohmann/json.hpp>

#include "dirichlet/poly.hpp"

namespace dirichlet {

/// {r < 0} for a degree-two defining polynomial r whose zero set is an
/// ellipse (or circle).  Construct through validate_domain.
class EllipseDomain {
 public:
  const RealPoly2& defining_polynomial() const { return r_; }
  /// Symmetric matrix of the degree-two part, row-major.
  const std::array<double, 4>& quadratic_form() const { return form_; }
  complex center() const { return center_; }
  double semi_major() const { return semi_major_; }
  double semi_minor() const { return semi_minor_; }
  /// Angle of the major axis against the x-axis, in (-pi/2, pi/2].
  double major_angle() const { return major_angle_; }
  /// r at the center, its minimum over the plane.
  double min_value() const { return min_value_; }

  /// Boundary point at parameter t in [0, 2 pi).
  complex boundary_point(double t) const;
  bool contains(complex point) const { return eval(r_, point) < 0.0; }

 private:
  friend EllipseDomain validate_domain(const RealPoly2& r);

  RealPoly2 r_;
  std::array<double, 4> form_{};
  complex center_;
  double semi_major_ = 0.0;
  double semi_minor_ = 0.0;
  double major_angle_ = 0.0;
  double min_value_ = 0.0;
};

/// Throws NotDegreeTwo, UnboundedDomain (quadratic form not positive
/// definite) or EmptyInterior (min r >= -1e-10).
EllipseDomain validate_domain(const RealPoly2& r);

struct EllipseSolution {
  RealPoly2 u;  // harmonic, equal to q on {r = 0}
  RealPoly2 p;  // u = q - r p
  double residual_laplacian_max = 0.0;
  double condition_estimate = 1.0;
};

/// Condition numbers above this make solve_ellipse throw SingularSystem.
inline constexpr double kMaxConditionEstimate = 1e12;

/// Solves Laplacian(r p) = Laplacian(q) for p of degree <= deg q and returns
/// u = q - r p.
EllipseSolution solve_ellipse(const EllipseDomain& dom, const RealPoly2& q);

/// Condition estimate of p -> Laplacian(r p) on polynomials of degree <= n
/// (after the trace normalization solve_ellipse applies).
double operator_condition_estimate(const EllipseDomain& dom, int n);

/// {"u": text, "p": text, "residual_laplacian_max": real}
nlohmann::json to_json(const EllipseSolution& s);

}  // namespace dirichlet
