#include <doctest.h>

#include <cmath>
#include <random>

#include "dirichlet/errors.hpp"
#include "dirichlet/poly.hpp"
#include "support.hpp"

using namespace dirichlet;
using dirichlet::testing::random_point;
using dirichlet::testing::random_real_poly;

namespace {

const complex I(0.0, 1.0);

ComplexPolyZZbar zzbar(int n, int m, complex c = 1.0) { return ComplexPolyZZbar::monomial(n, m, c); }

}  // namespace

TEST_CASE("to_zzbar on small inputs") {
  const auto x = to_zzbar(parse_real_poly("x"));
  CHECK(coefficient_distance(x, zzbar(1, 0, 0.5) + zzbar(0, 1, 0.5)) == 0.0);
  CHECK(to_zzbar(RealPoly2(1.0)) == ComplexPolyZZbar(complex(1.0)));

  const auto r2 = to_zzbar(parse_real_poly("x^2 + y^2"));
  REQUIRE(r2.size() == 1);
  CHECK(r2.coefficient(1, 1) == complex(1.0));
}

TEST_CASE("from_zzbar") {
  CHECK(from_zzbar(zzbar(1, 1)) == parse_real_poly("x^2 + y^2"));
  CHECK(from_zzbar(ComplexPolyZZbar(complex(1.0))) == RealPoly2(1.0));
  CHECK_THROWS_AS(from_zzbar(zzbar(1, 0)), NonRealPolynomial);
  CHECK(from_zzbar(zzbar(1, 0, -0.5 * I) + zzbar(0, 1, 0.5 * I)) == parse_real_poly("y"));
}

TEST_CASE("wirtinger derivatives") {
  CHECK(wirtinger(zzbar(1, 1), Wirtinger::d_dzbar) == zzbar(1, 0));
  CHECK(wirtinger(zzbar(3, 0), Wirtinger::d_dzbar).is_zero());
  CHECK(wirtinger(zzbar(2, 1), Wirtinger::d_dz) == zzbar(1, 1, 2.0));

  SUBCASE("d/dzbar maps z^n zbar^m to m z^n zbar^(m-1)") {
    for (int n = 0; n <= 5; ++n) {
      for (int m = 0; m <= 5; ++m) {
        const auto d = wirtinger(zzbar(n, m), Wirtinger::d_dzbar);
        if (m == 0) {
          CHECK(d.is_zero());
        } else {
          CHECK(d == zzbar(n, m - 1, double(m)));
        }
      }
    }
  }

  SUBCASE("annihilates exactly the analytic polynomials") {
    const auto analytic = zzbar(0, 0, 2.0) + zzbar(3, 0, I) + zzbar(7, 0, -1.5);
    CHECK(is_analytic(analytic));
    CHECK(wirtinger(analytic, Wirtinger::d_dzbar).is_zero());
    const auto mixed = analytic + zzbar(2, 1, 1e-3);
    CHECK_FALSE(is_analytic(mixed));
    CHECK_FALSE(wirtinger(mixed, Wirtinger::d_dzbar).is_zero());
    CHECK(is_antianalytic(zzbar(0, 4)));
  }
}

TEST_CASE("laplacian") {
  CHECK(laplacian(parse_real_poly("x^2 + y^2")) == RealPoly2(4.0));
  CHECK(laplacian(parse_real_poly("x")).is_zero());
  CHECK(laplacian(parse_real_poly("x^2*y^2")) == parse_real_poly("2*y^2 + 2*x^2"));
}

TEST_CASE("eval") {
  CHECK(eval(parse_real_poly("x^2 + y^2"), complex(3.0, 4.0)) == doctest::Approx(25.0));
  CHECK(eval(RealPoly2(1.0), complex(-7.0, 2.0)) == 1.0);
  for (double t : {0.0, 0.3, 1.7, 3.0, 5.9}) {
    CHECK(std::abs(eval(zzbar(1, 1), std::polar(1.0, t)) - 1.0) < 1e-15);
  }
}

TEST_CASE("round trip through the z, zbar basis") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const RealPoly2 p = random_real_poly(rng, 1 + trial % 10);
    CHECK(coefficient_distance(from_zzbar(to_zzbar(p)), p) <= 1e-12);
  }
}

TEST_CASE("evaluation homomorphism") {
  std::mt19937_64 rng(12);
  const RealPoly2 p = random_real_poly(rng, 8);
  const ComplexPolyZZbar q = to_zzbar(p);
  for (int k = 0; k < 100; ++k) {
    const complex z = random_point(rng, 1.0);
    CHECK(std::abs(eval(q, z) - eval(p, z)) <= 1e-10);
  }
}

TEST_CASE("laplacian equals 4 d2/dz dzbar") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const RealPoly2 p = random_real_poly(rng, 2 + trial % 8);
    const auto route = complex(4.0) * wirtinger(wirtinger(to_zzbar(p), Wirtinger::d_dzbar), Wirtinger::d_dz);
    CHECK(coefficient_distance(from_zzbar(route), laplacian(p)) <= 1e-12);
  }
}

TEST_CASE("ring operations") {
  const auto p = parse_real_poly("x + y");
  CHECK(p * p == parse_real_poly("x^2 + 2*x*y + y^2"));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(swap_variables(parse_real_poly("x^3*y")) == parse_real_poly("x*y^3"));
  CHECK(reflect_y(parse_real_poly("x*y + y^2")) == parse_real_poly("-x*y + y^2"));
  CHECK(partial_x(parse_real_poly("x^3*y")) == parse_real_poly("3*x^2*y"));
  CHECK(partial_y(parse_real_poly("x^3*y")) == parse_real_poly("x^3"));
  CHECK(RealPoly2{{Exponent{1, 0}, 1e-15}}.is_zero());
}

TEST_CASE("text grammar") {
  CHECK(parse_real_poly("3.5*x^2*y - 1") == RealPoly2{{Exponent{2, 1}, 3.5}, {Exponent{0, 0}, -1.0}});
  CHECK(parse_real_poly("  -x ") == RealPoly2{{Exponent{1, 0}, -1.0}});
  CHECK(parse_real_poly("(x + 1)^2") == parse_real_poly("x^2 + 2*x + 1"));
  CHECK(to_string(parse_real_poly("3.5*x^2*y - 1")) == "3.5*x^2*y - 1");
  CHECK(to_string(RealPoly2()) == "0");
  CHECK(to_string(parse_real_poly("-x^2 + y")) == "-x^2 + y");

  CHECK(parse_zzbar_poly("z*zb") == zzbar(1, 1));
  CHECK(parse_zzbar_poly("2i*z^2") == zzbar(2, 0, 2.0 * I));
  CHECK(parse_zzbar_poly("(1 + 2i)*zb") == zzbar(0, 1, complex(1.0, 2.0)));

  CHECK_THROWS_AS(parse_real_poly("x^"), ParseError);
  CHECK_THROWS_AS(parse_real_poly("x + z"), ParseError);
  CHECK_THROWS_AS(parse_real_poly("x/2"), ParseError);
  CHECK_THROWS_AS(parse_real_poly(""), ParseError);
  CHECK_THROWS_AS(parse_real_poly("(x + 1"), ParseError);
  CHECK_THROWS_AS(parse_real_poly("2i*x"), ParseError);

  SUBCASE("printed form round-trips bit for bit") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
      const RealPoly2 p = random_real_poly(rng, trial % 9);
      const std::string text = to_string(p);
      const RealPoly2 back = parse_real_poly(text);
      CHECK(back == p);
      CHECK(to_string(back) == text);
    }
    const ComplexPolyZZbar q = to_zzbar(random_real_poly(rng, 6)) + zzbar(3, 0, complex(0.25, -1e-3));
    CHECK(parse_zzbar_poly(to_string(q)) == q);
  }
}
