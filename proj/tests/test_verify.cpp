#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dirichlet/errors.hpp"
#include "dirichlet/disc_solver.hpp"
#include "dirichlet/verify.hpp"
#include "support.hpp"

using namespace dirichlet;
using dirichlet::testing::random_point;

namespace {

constexpr double kPi = std::numbers::pi;
const complex I(0.0, 1.0);

Evaluator fn(std::function<complex(complex)> f) { return Evaluator{std::move(f)}; }

const Evaluator zbar = fn([](complex z) { return std::conj(z); });

}  // namespace

TEST_CASE("check_averaging") {
  CHECK(check_averaging(fn([](complex z) { return complex((z * z).real()); }), complex(0.2, 0.1), 0.3) <= 1e-12);
  CHECK(check_averaging(fn([](complex z) { return complex(std::norm(z)); }), 0.0, 0.5) ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK(check_averaging(fn([](complex) { return complex(4.0); }), 0.3, 0.2) == 0.0);
  CHECK_THROWS_AS(check_averaging(Evaluator::of(solve_disc(parse_real_poly("x"))), 0.5, 0.6), DomainViolation);
}

TEST_CASE("contour_integral_circle") {
  CHECK(std::abs(contour_integral_circle(zbar, 0.0, 1.0) - 2.0 * kPi * I) < 1e-12);
  CHECK(std::abs(contour_integral_circle(fn([](complex z) { return z * z; }), complex(0.3, -2.0), 1.7)) < 1e-12);
  CHECK(std::abs(contour_integral_circle(fn([](complex z) { return std::conj(z * z); }), 0.0, 1.0)) < 1e-12);
}

TEST_CASE("contour_integral_rect") {
  const Rect unit{0.0, complex(1.0, 1.0)};
  CHECK(std::abs(contour_integral_rect(zbar, unit) - 2.0 * I) < 1e-13);
  CHECK(std::abs(contour_integral_rect(fn([](complex z) { return std::pow(z, 5); }),
                                       Rect{complex(-0.3, 0.2), complex(1.1, 0.9)})) < 1e-12);
  CHECK(std::abs(contour_integral_rect(fn([](complex z) { return complex(z.real()); }), unit) - I) < 1e-13);
}

TEST_CASE("analytic polynomials have vanishing contour integrals") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int degree = 0; degree <= 10; ++degree) {
    ComplexPolyZZbar f;
    for (int n = 0; n <= degree; ++n) f = f + ComplexPolyZZbar::monomial(n, 0, complex(coef(rng), coef(rng)));
    const Evaluator ev = Evaluator::of(f);
    for (int k = 0; k < 10; ++k) {
      const complex a = random_point(rng, 0.5);
      CHECK(std::abs(contour_integral_circle(ev, a, 0.4)) <= 1e-11);
      const complex lo = random_point(rng, 0.5);
      const Rect rect{lo, lo + complex(0.3, 0.2)};
      CHECK(std::abs(contour_integral_rect(ev, rect)) <= 1e-11);
    }
  }
}

TEST_CASE("gauss_legendre integrates polynomials of degree 2n-1") {
  const GaussLegendre g = gauss_legendre(16);
  double sum = 0.0;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) sum += g.weights[k] * std::pow(g.nodes[k], 30);
  CHECK(sum == doctest::Approx(2.0 / 31.0).epsilon(1e-14));
}

TEST_CASE("green_residual_disc") {
  CHECK(green_residual_disc(ComplexPolyZZbar::monomial(0, 1)) <= 1e-12);
  CHECK(green_residual_disc(ComplexPolyZZbar::monomial(3, 0)) <= 1e-12);
  CHECK(green_residual_disc(ComplexPolyZZbar::monomial(1, 1)) <= 1e-12);
  CHECK(std::abs(disc_area_integral(ComplexPolyZZbar::monomial(2, 2)) - kPi / 3.0) < 1e-15);
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; n + m <= 8; ++m) CHECK(green_residual_disc(ComplexPolyZZbar::monomial(n, m)) <= 1e-11);
  }
}

TEST_CASE("fd_laplacian") {
  const Evaluator harmonic = Evaluator::of(parse_real_poly("x^2 - y^2"));
  CHECK(std::abs(fd_laplacian(harmonic, complex(0.3, -0.7))) <= 1e-6);
  CHECK(fd_laplacian(Evaluator::of(parse_real_poly("x^2 + y^2")), complex(0.2, 0.1)) ==
        doctest::Approx(4.0).epsilon(1e-6));
  CHECK(std::abs(fd_laplacian(Evaluator::of(parse_real_poly("x")), complex(0.5, 0.5))) <= 1e-8);
  CHECK_THROWS_AS(fd_laplacian(Evaluator::of(solve_disc(parse_real_poly("x"))), complex(1.0, 0.0)),
                  DomainViolation);
}

TEST_CASE("contour_length_bound_check") {
  const ContourBound one = contour_length_bound_check(fn([](complex) { return complex(1.0); }), Circle{0.0, 1.0});
  CHECK(one.lhs < 1e-14);
  CHECK(one.rhs == doctest::Approx(2.0 * kPi));

  const ContourBound eq = contour_length_bound_check(zbar, Circle{0.0, 1.0});
  CHECK(eq.lhs == doctest::Approx(2.0 * kPi));
  CHECK(eq.rhs == doctest::Approx(2.0 * kPi));
  CHECK(eq.ok());

  const ContourBound z = contour_length_bound_check(fn([](complex w) { return w; }), Circle{0.0, 0.5});
  CHECK(z.lhs < 1e-14);
  CHECK(z.rhs == doctest::Approx(2.0 * kPi * 0.25));

  const ContourBound rect = contour_length_bound_check(zbar, Rect{0.0, complex(1.0, 1.0)});
  CHECK(rect.lhs == doctest::Approx(2.0));
  CHECK(rect.ok());
}

TEST_CASE("goursat_localize") {
  const Square unit{complex(0.5, 0.5), 1.0};

  const GoursatTrace analytic = goursat_localize(fn([](complex z) { return z * z; }), unit, 5);
  CHECK(analytic.analytic);
  CHECK(analytic.levels.empty());
  CHECK(std::abs(analytic.initial_integral) <= 1e-12);

  const GoursatTrace t = goursat_localize(zbar, unit, 3);
  CHECK_FALSE(t.analytic);
  CHECK(std::abs(t.initial_integral - 2.0 * I) < 1e-13);
  REQUIRE(t.levels.size() == 3);
  for (std::size_t k = 0; k < t.levels.size(); ++k) {
    const double expected = 2.0 * std::pow(4.0, -double(k + 1));
    CHECK(std::abs(t.levels[k].integral - expected * I) < 1e-13);
    CHECK(t.levels[k].bound_holds);
  }
  CHECK(t.levels.back().square.side == 0.125);
  // ties resolve to the north-west quarter every time
  CHECK(t.levels.front().square.center == complex(0.25, 0.75));
  CHECK(t.all_bounds_hold());

  const GoursatTrace sq = goursat_localize(fn([](complex z) { return std::conj(z * z); }), unit, 2);
  CHECK(std::abs(sq.initial_integral) > 0.0);
  CHECK(sq.all_bounds_hold());
}

TEST_CASE("check_max_principle") {
  const MaxPrincipleReport re = check_max_principle(fn([](complex z) { return complex(z.real()); }), 101);
  CHECK(re.ok);
  CHECK(re.boundary_max == doctest::Approx(1.0));
  CHECK(re.interior_max < 1.0);

  CHECK(check_max_principle(Evaluator::of(solve_disc(parse_real_poly("x^2"))), 101).ok);

  const MaxPrincipleReport bump = check_max_principle(Evaluator::of(parse_real_poly("1 - x^2 - y^2")), 101);
  CHECK_FALSE(bump.ok);
  CHECK(bump.interior_max == doctest::Approx(1.0));
  CHECK(std::abs(bump.boundary_max) < 1e-12);
}
