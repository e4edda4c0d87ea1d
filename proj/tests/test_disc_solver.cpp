#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "dirichlet/disc_solver.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/verify.hpp"
#include "support.hpp"

using namespace dirichlet;
using dirichlet::testing::random_point;
using dirichlet::testing::random_real_poly;

namespace {

ComplexPolyZZbar zzbar(int n, int m) { return ComplexPolyZZbar::monomial(n, m); }

}  // namespace

TEST_CASE("reduce_on_circle") {
  const HarmonicRep one = reduce_on_circle(zzbar(2, 2));
  CHECK(one.a0 == complex(1.0));
  CHECK(to_zzbar(one) == ComplexPolyZZbar(complex(1.0)));

  const HarmonicRep z2 = reduce_on_circle(zzbar(3, 1));
  CHECK(to_zzbar(z2) == zzbar(2, 0));
  CHECK(z2.a0 == complex(0.0));

  const HarmonicRep zero = reduce_on_circle(ComplexPolyZZbar());
  CHECK(zero.a0 == complex(0.0));
  CHECK(zero.order() == 0);
  CHECK(reduce_on_circle(zzbar(1, 4)).antianalytic.at(2) == complex(1.0));
}

TEST_CASE("solve_disc examples") {
  const HarmonicRep x = solve_disc(parse_real_poly("x"));
  CHECK(x.a0 == complex(0.0));
  CHECK(x.analytic.at(0) == complex(0.5));
  CHECK(x.antianalytic.at(0) == complex(0.5));
  CHECK(x.real_valued);

  const HarmonicRep x2 = solve_disc(parse_real_poly("x^2"));
  CHECK(x2.a0 == complex(0.5));
  CHECK(x2.analytic.at(1) == complex(0.25));
  CHECK(x2.antianalytic.at(1) == complex(0.25));
  CHECK(eval_harmonic(x2, 0.0) == complex(0.5));
  CHECK(std::abs(eval_harmonic(x2, complex(0.0, 1.0))) < 1e-15);

  const HarmonicRep r2 = solve_disc(parse_real_poly("x^2 + y^2"));
  CHECK(r2.a0 == complex(1.0));
  CHECK(to_zzbar(r2) == ComplexPolyZZbar(complex(1.0)));
  CHECK(eval_harmonic(r2, complex(0.3, 0.4)) == complex(1.0));
}

TEST_CASE("eval_harmonic rejects points outside the closed disc") {
  const HarmonicRep rep = solve_disc(parse_real_poly("x"));
  CHECK_NOTHROW(eval_harmonic(rep, complex(1.0, 0.0)));
  CHECK_THROWS_AS(eval_harmonic(rep, complex(1.0, 1e-3)), OutsideDomain);
}

TEST_CASE("boundary agreement") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const RealPoly2 p = random_real_poly(rng, 1 + trial % 8);
    const HarmonicRep u = solve_disc(p);
    double worst = 0.0;
    for (int j = 0; j < 720; ++j) {
      const complex w = std::polar(1.0, 2.0 * std::numbers::pi * j / 720);
      worst = std::max(worst, std::abs(eval_harmonic(u, w) - eval(p, w)));
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("harmonicity, averaging and maximum principle") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const HarmonicRep u = solve_disc(random_real_poly(rng, 2 + trial));
    const Evaluator f = Evaluator::of(u);
    for (int k = 0; k < 50; ++k) {
      CHECK(std::abs(fd_laplacian(f, random_point(rng, 0.8))) <= 1e-5);
    }
    for (int k = 0; k < 20; ++k) {
      const complex a = random_point(rng, 0.9);
      const double r = (1.0 - std::abs(a) - 0.05) * (0.1 + 0.9 * unit(rng));
      CHECK(check_averaging(f, a, r) <= 1e-10);
    }
    const MaxPrincipleReport report = check_max_principle(f, 101);
    CHECK(report.ok);
    CHECK(report.min_ok);
  }
}

TEST_CASE("linearity") {
  std::mt19937_64 rng(23);
  const RealPoly2 p = random_real_poly(rng, 6);
  const RealPoly2 q = random_real_poly(rng, 4);
  const double alpha = 0.7;
  const double beta = -2.25;
  const HarmonicRep lhs = solve_disc(alpha * p + beta * q);
  const HarmonicRep rhs = alpha * solve_disc(p) + beta * solve_disc(q);
  CHECK(coefficient_distance(lhs, rhs) <= 1e-12);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(24);
  const HarmonicRep u = solve_disc(random_real_poly(rng, 5));
  CHECK(harmonic_rep_from_json(to_json(u)) == u);
  CHECK_THROWS_AS(harmonic_rep_from_json(nlohmann::json{{"a0", 1}}), ParseError);
}
