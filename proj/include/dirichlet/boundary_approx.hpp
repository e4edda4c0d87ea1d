#pragma once

// Constructive polynomial approximation of continuous data on the unit
// circle: shift the data to vanish at +-1, split it into functions of x on
// the upper and lower arcs, approximate those by Bernstein polynomials, and
// glue the halves with a polynomial approximation of a piecewise-linear
// cutoff in y.

#include <functional>

#include "dirichlet/kernels.hpp"
#include "dirichlet/poly.hpp"

namespace dirichlet {

struct ApproxPlan {
  int degree_1d = 64;
  double epsilon = 0.1;
  int cutoff_degree = 64;

  /// Throws DomainViolation unless both degrees are >= 1 and epsilon is in (0, 0.5].
  void validate() const;
};

/// A real function on [-1, 1].
struct RealFunction1D {
  std::function<double(double)> f;
  double operator()(double x) const { return f(x); }
};

struct AffineShift {
  double a = 0.0;  // coefficient of x
  double b = 0.0;  // constant
  BoundaryFunction psi;  // phi - a cos(theta) - b
};

/// a = (phi(0) - phi(pi)) / 2, b = (phi(0) + phi(pi)) / 2.  Throws
/// DomainViolation for complex-valued phi.
AffineShift affine_shift(const BoundaryFunction& phi);

struct ArcSplit {
  RealFunction1D top;     // x -> psi(arccos x)
  RealFunction1D bottom;  // x -> psi(-arccos x)
};

/// Throws ShiftRequired unless |psi(0)|, |psi(pi)| <= 1e-10.
ArcSplit split_top_bot(const BoundaryFunction& psi);

/// Degree-n Bernstein polynomial of g on [-1, 1] (nodes x_k = (2k - n)/n),
/// converted to the monomial basis in x with exact rational arithmetic
/// before the final rounding to double.
RealPoly2 approx_1d(const RealFunction1D& g, int degree);

/// The piecewise-linear cutoff: 0 for y < -eps, 1 for y > eps, linear between.
double cutoff_function(double epsilon, double y);

/// Bernstein approximation of the cutoff as a polynomial in y.  Built as
/// 1/2 plus the Bernstein polynomial of the odd function cutoff - 1/2, so
/// p(y) + p(-y) == 1 holds coefficient-wise.
RealPoly2 cutoff_poly(double epsilon, int degree);

struct CircleApprox {
  RealPoly2 p;
  double sup_error = 0.0;
  // Pieces of p = a x + b + p_top(x) p_eps(y) + p_bot(x) p_eps(-y).
  double a = 0.0;
  double b = 0.0;
  RealPoly2 p_top;
  RealPoly2 p_bot;
  RealPoly2 p_eps;
};

inline constexpr int kSupErrorSamples = 2048;

CircleApprox circle_polynomial_approx(const BoundaryFunction& phi, const ApproxPlan& plan);

/// max_j |phi(theta_j) - p(cos theta_j, sin theta_j)| on `samples`
/// equispaced angles; throws DomainViolation for samples < 16.
double sup_error_on_circle(const BoundaryFunction& phi, const RealPoly2& p, int samples);

}  // namespace dirichlet
