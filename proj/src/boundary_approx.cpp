#include "dirichlet/boundary_approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gmpxx.h>

#include "dirichlet/errors.hpp"

namespace dirichlet {
namespace {

constexpr double kPi = std::numbers::pi;

void require_real(const BoundaryFunction& phi) {
  if (!phi.real_valued()) {
    throw DomainViolation("boundary data '" + phi.label() + "' is not real-valued");
  }
}

}  // namespace

void ApproxPlan::validate() const {
  if (degree_1d < 1 || cutoff_degree < 1) {
    throw DomainViolation("approximation degrees must be at least 1");
  }
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw DomainViolation("cutoff half-width must lie in (0, 0.5], got " + std::to_string(epsilon));
  }
}

AffineShift affine_shift(const BoundaryFunction& phi) {
  require_real(phi);
  const double at_one = phi.real_at(0.0);
  const double at_minus_one = phi.real_at(kPi);
  AffineShift s;
  s.a = 0.5 * (at_one - at_minus_one);
  s.b = 0.5 * (at_one + at_minus_one);
  const double a = s.a;
  const double b = s.b;
  s.psi = BoundaryFunction::closed_form(
      "shifted(" + phi.label() + ")",
      [phi, a, b](double t) { return complex(phi.real_at(t) - a * std::cos(t) - b, 0.0); }, true);
  return s;
}

ArcSplit split_top_bot(const BoundaryFunction& psi) {
  require_real(psi);
  const double at_one = psi.real_at(0.0);
  const double at_minus_one = psi.real_at(kPi);
  if (std::abs(at_one) > 1e-10 || std::abs(at_minus_one) > 1e-10) {
    throw ShiftRequired("data must vanish at z = +-1 before splitting; apply affine_shift first");
  }
  auto angle = [](double x) { return std::acos(std::clamp(x, -1.0, 1.0)); };
  return ArcSplit{RealFunction1D{[psi, angle](double x) { return psi.real_at(angle(x)); }},
                  RealFunction1D{[psi, angle](double x) { return psi.real_at(-angle(x)); }}};
}

RealPoly2 approx_1d(const RealFunction1D& g, int degree) {
  if (degree < 1) throw DomainViolation("Bernstein degree must be at least 1");
  const int n = degree;

  // B(x) = 2^-n sum_k g(x_k) C(n,k) (1+x)^k (1-x)^(n-k), accumulated by a
  // Horner scheme in (1+x) from k = n downwards:
  //   R <- (1+x) R + g(x_k) C(n,k) (1-x)^(n-k).
  std::vector<mpq_class> acc{mpq_class(g(1.0))};
  std::vector<mpq_class> one_minus_x_pow{mpq_class(1)};
  mpz_class binom = 1;  // C(n, k) for the current k, starting at k = n
  for (int k = n - 1; k >= 0; --k) {
    std::vector<mpq_class> next(acc.size() + 1);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j];
      next[j + 1] += acc[j];
    }
    acc = std::move(next);

    std::vector<mpq_class> pw(one_minus_x_pow.size() + 1);
    for (std::size_t j = 0; j < one_minus_x_pow.size(); ++j) {
      pw[j] += one_minus_x_pow[j];
      pw[j + 1] -= one_minus_x_pow[j];
    }
    one_minus_x_pow = std::move(pw);

    // C(n, k) = C(n, k+1) (k+1) / (n-k)
    binom = binom * (k + 1) / (n - k);
    const double node = static_cast<double>(2 * k - n) / n;
    const mpq_class weight = mpq_class(g(node)) * binom;
    for (std::size_t j = 0; j < one_minus_x_pow.size(); ++j) acc[j] += weight * one_minus_x_pow[j];
  }

  mpz_class denominator = 1;
  denominator <<= n;
  RealPoly2::TermMap terms;
  for (std::size_t j = 0; j < acc.size(); ++j) {
    const mpq_class c = acc[j] / denominator;
    const double v = c.get_d();
    if (v != 0.0) terms.emplace(Exponent{static_cast<int>(j), 0}, v);
  }
  return RealPoly2(std::move(terms));
}

double cutoff_function(double epsilon, double y) {
  return 0.5 + std::clamp(y / (2.0 * epsilon), -0.5, 0.5);
}

RealPoly2 cutoff_poly(double epsilon, int degree) {
  if (!(epsilon > 0.0 && epsilon <= 0.5)) {
    throw DomainViolation("cutoff half-width must lie in (0, 0.5], got " + std::to_string(epsilon));
  }
  // 1/2 plus an odd part, so p(y) + p(-y) = 1 exactly.
  const RealFunction1D odd{[epsilon](double y) { return std::clamp(y / (2.0 * epsilon), -0.5, 0.5); }};
  return swap_variables(RealPoly2(0.5) + approx_1d(odd, degree));
}

CircleApprox circle_polynomial_approx(const BoundaryFunction& phi, const ApproxPlan& plan) {
  plan.validate();
  const AffineShift shift = affine_shift(phi);
  const ArcSplit arcs = split_top_bot(shift.psi);

  CircleApprox out;
  out.a = shift.a;
  out.b = shift.b;
  out.p_top = approx_1d(arcs.top, plan.degree_1d);
  out.p_bot = approx_1d(arcs.bottom, plan.degree_1d);
  out.p_eps = cutoff_poly(plan.epsilon, plan.cutoff_degree);
  const RealPoly2 affine{{Exponent{1, 0}, shift.a}, {Exponent{0, 0}, shift.b}};
  out.p = affine + out.p_top * out.p_eps + out.p_bot * reflect_y(out.p_eps);
  out.sup_error = sup_error_on_circle(phi, out.p, kSupErrorSamples);
  return out;
}

double sup_error_on_circle(const BoundaryFunction& phi, const RealPoly2& p, int samples) {
  if (samples < 16) throw DomainViolation("sup error needs at least 16 samples");
  double worst = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double t = 2.0 * kPi * j / samples;
    worst = std::max(worst, std::abs(phi(t) - complex(eval(p, std::polar(1.0, t)), 0.0)));
  }
  return worst;
}

}  // namespace dirichlet
