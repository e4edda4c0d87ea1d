#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dirichlet/boundary_approx.hpp"
#include "dirichlet/disc_solver.hpp"
#include "dirichlet/errors.hpp"

using namespace dirichlet;

namespace {

constexpr double kPi = std::numbers::pi;

double eval_x(const RealPoly2& p, double x) { return eval(p, complex(x, 0.0)); }
double eval_y(const RealPoly2& p, double y) { return eval(p, complex(0.0, y)); }

}  // namespace

TEST_CASE("affine_shift") {
  const AffineShift c = affine_shift(BoundaryFunction::cosine(1));
  CHECK(c.a == doctest::Approx(1.0));
  CHECK(c.b == doctest::Approx(0.0));
  for (double t : {0.1, 1.0, 2.0, 4.0}) CHECK(std::abs(c.psi.real_at(t)) < 1e-15);

  const AffineShift s = affine_shift(BoundaryFunction::sine(1));
  CHECK(std::abs(s.a) < 1e-15);
  CHECK(std::abs(s.b) < 1e-15);
  CHECK(s.psi.real_at(1.0) == doctest::Approx(std::sin(1.0)));

  const AffineShift k = affine_shift(BoundaryFunction::constant(5.0));
  CHECK(k.a == 0.0);
  CHECK(k.b == 5.0);
  CHECK(k.psi.real_at(0.7) == 0.0);

  CHECK_THROWS_AS(affine_shift(parse_boundary_spec("zpoly:z")), DomainViolation);
}

TEST_CASE("split_top_bot") {
  const ArcSplit s = split_top_bot(BoundaryFunction::sine(1));
  for (double x : {-0.9, -0.3, 0.0, 0.5}) {
    CHECK(s.top(x) == doctest::Approx(std::sqrt(1 - x * x)));
    CHECK(s.bottom(x) == doctest::Approx(-std::sqrt(1 - x * x)));
  }
  const ArcSplit zero = split_top_bot(BoundaryFunction::constant(0.0));
  CHECK(zero.top(0.2) == 0.0);
  CHECK(zero.bottom(-0.2) == 0.0);
  const ArcSplit s2 = split_top_bot(BoundaryFunction::sine(2));
  CHECK(s2.top(0.6) == doctest::Approx(2 * 0.6 * 0.8));
  CHECK_THROWS_AS(split_top_bot(BoundaryFunction::cosine(1)), ShiftRequired);
}

TEST_CASE("approx_1d") {
  for (int n : {1, 2, 7, 40}) {
    CHECK(coefficient_distance(approx_1d(RealFunction1D{[](double x) { return x; }}, n), parse_real_poly("x")) <=
          1e-12);
    CHECK(coefficient_distance(approx_1d(RealFunction1D{[](double) { return -3.0; }}, n), RealPoly2(-3.0)) <=
          1e-12);
  }
  // x^2 on [-1, 1] at degree n: x^2 + (1 - x^2)/n.
  for (int n : {2, 5, 16}) {
    const RealPoly2 b = approx_1d(RealFunction1D{[](double x) { return x * x; }}, n);
    const RealPoly2 expected = parse_real_poly("x^2") + (1.0 / n) * parse_real_poly("1 - x^2");
    CHECK(coefficient_distance(b, expected) <= 1e-12);
  }
  CHECK_THROWS_AS(approx_1d(RealFunction1D{[](double x) { return x; }}, 0), DomainViolation);
}

TEST_CASE("cutoff_poly") {
  const RealPoly2 p = cutoff_poly(0.1, 64);
  CHECK(p.max_first() == 0);
  CHECK(std::abs(eval_y(p, 0.0) - 0.5) <= 0.05);
  CHECK(std::abs(eval_y(p, 1.0) - 1.0) <= 0.05);
  CHECK(std::abs(eval_y(p, -1.0)) <= 0.05);
  for (double y : {-0.7, -0.05, 0.3}) {
    CHECK(std::abs(eval_y(p, y) + eval_y(p, -y) - 1.0) < 1e-12);
  }
  CHECK(cutoff_function(0.1, 0.05) == doctest::Approx(0.75));
  CHECK_THROWS_AS(cutoff_poly(0.0, 8), DomainViolation);
}

TEST_CASE("circle_polynomial_approx examples") {
  const CircleApprox c = circle_polynomial_approx(BoundaryFunction::cosine(1), ApproxPlan{});
  CHECK(coefficient_distance(c.p, parse_real_poly("x")) <= 1e-12);
  CHECK(c.sup_error <= 1e-10);

  const CircleApprox s = circle_polynomial_approx(BoundaryFunction::sine(1), ApproxPlan{128, 0.1, 64});
  CHECK(s.sup_error <= 0.1);

  const CircleApprox a = circle_polynomial_approx(BoundaryFunction::abs_sine(), ApproxPlan{128, 0.05, 128});
  CHECK(a.sup_error <= 0.1);

  CHECK_THROWS_AS(circle_polynomial_approx(BoundaryFunction::abs_sine(), ApproxPlan{8, 0.7, 8}), DomainViolation);
}

TEST_CASE("decomposition is exact on the circle") {
  const BoundaryFunction phi = parse_boundary_spec("poly:x^3 + y^2*x + 0.3*y");
  const CircleApprox c = circle_polynomial_approx(phi, ApproxPlan{24, 0.2, 24});
  const RealPoly2 rebuilt = RealPoly2{{Exponent{1, 0}, c.a}, {Exponent{0, 0}, c.b}} + c.p_top * c.p_eps +
                            c.p_bot * reflect_y(c.p_eps);
  CHECK(coefficient_distance(rebuilt, c.p) <= 1e-12);
  CHECK(c.p_top.max_second() == 0);
  CHECK(c.p_eps.max_first() == 0);
}

TEST_CASE("sup_error_on_circle") {
  CHECK(sup_error_on_circle(BoundaryFunction::cosine(1), parse_real_poly("x"), 2048) <= 1e-12);
  CHECK(sup_error_on_circle(BoundaryFunction::constant(1.0), RealPoly2(), 2048) == 1.0);
  CHECK(sup_error_on_circle(BoundaryFunction::cosine(2), parse_real_poly("x^2 - y^2"), 2048) <= 1e-12);
  CHECK_THROWS_AS(sup_error_on_circle(BoundaryFunction::cosine(1), RealPoly2(), 4), DomainViolation);
}

TEST_CASE("budget doublings do not increase the error") {
  double previous = 1e300;
  ApproxPlan plan{8, 0.5, 8};
  for (int step = 0; step <= 4; ++step) {
    const double err = circle_polynomial_approx(BoundaryFunction::abs_sine(), plan).sup_error;
    CHECK(err <= previous);
    previous = err;
    plan = ApproxPlan{2 * plan.degree_1d, plan.epsilon / 2, 2 * plan.cutoff_degree};
  }
}

TEST_CASE("end-to-end Dirichlet error bounded by the boundary error") {
  const BoundaryFunction phi = BoundaryFunction::abs_sine();
  const CircleApprox c = circle_polynomial_approx(phi, ApproxPlan{64, 0.1, 64});
  const HarmonicRep u = solve_disc(c.p);
  for (int k = 0; k < 50; ++k) {
    const complex z = std::polar(0.9 * (k % 10) / 9.0, 2.0 * kPi * k / 50.0);
    CHECK(std::abs(eval_harmonic(u, z).real() - poisson_integral(phi, z)) <= c.sup_error + 1e-8);
  }
}
