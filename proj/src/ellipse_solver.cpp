#include "dirichlet/ellipse_solver.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "dirichlet/errors.hpp"

namespace dirichlet {
namespace {

// Graded-lex basis of polynomials of total degree <= n.
std::vector<Exponent> basis(int n) {
  std::vector<Exponent> out;
  for (int d = 0; d <= n; ++d) {
    for (int i = d; i >= 0; --i) out.push_back(Exponent{i, d - i});
  }
  return out;
}

int basis_index(Exponent e) {
  const int d = e.total();
  return d * (d + 1) / 2 + (d - e.first);
}

// Matrix of p -> Laplacian(r p) on the degree-n basis.
Eigen::MatrixXd assemble(const RealPoly2& r, int n) {
  const auto monomials = basis(n);
  const auto dim = static_cast<Eigen::Index>(monomials.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Exponent e = monomials[static_cast<std::size_t>(col)];
    const RealPoly2 image = laplacian(r * RealPoly2::monomial(e.first, e.second));
    for (const auto& [ie, c] : image.terms()) a(basis_index(ie), col) = c;
  }
  return a;
}

RealPoly2 normalized(const EllipseDomain& dom) {
  const auto& f = dom.quadratic_form();
  return (2.0 / (f[0] + f[3])) * dom.defining_polynomial();
}

}  // namespace

complex EllipseDomain::boundary_point(double t) const {
  const complex local(semi_major_ * std::cos(t), semi_minor_ * std::sin(t));
  return center_ + std::polar(1.0, major_angle_) * local;
}

EllipseDomain validate_domain(const RealPoly2& r) {
  if (r.degree() != 2) {
    throw NotDegreeTwo("defining polynomial must have total degree exactly 2, got " +
                       std::to_string(r.degree()));
  }
  const double a = r.coefficient(2, 0);
  const double b = r.coefficient(1, 1);
  const double c = r.coefficient(0, 2);
  const double mean = 0.5 * (a + c);
  const double radius = std::hypot(0.5 * (a - c), 0.5 * b);
  const double lambda_min = mean - radius;
  const double lambda_max = mean + radius;
  if (!(lambda_min > 1e-10)) {
    throw UnboundedDomain("quadratic part of the defining polynomial is not positive definite");
  }
  // center solves A c = -g / 2 for the gradient coefficients g.
  const double gx = r.coefficient(1, 0);
  const double gy = r.coefficient(0, 1);
  const double det = a * c - 0.25 * b * b;
  const double cx = (-0.5 * gx * c + 0.25 * gy * b) / det;
  const double cy = (-0.5 * gy * a + 0.25 * gx * b) / det;
  const double min_value = r.coefficient(0, 0) + 0.5 * (gx * cx + gy * cy);
  if (!(min_value < -1e-10)) {
    throw EmptyInterior("defining polynomial has no negative values (minimum " +
                        std::to_string(min_value) + ")");
  }

  EllipseDomain dom;
  dom.r_ = r;
  dom.form_ = {a, 0.5 * b, 0.5 * b, c};
  dom.center_ = complex(cx, cy);
  dom.min_value_ = min_value;
  dom.semi_major_ = std::sqrt(-min_value / lambda_min);
  dom.semi_minor_ = std::sqrt(-min_value / lambda_max);
  // 0.5 atan2(b, a - c) points along the eigenvector of lambda_max.
  double angle = 0.5 * std::atan2(b, a - c) + 0.5 * std::numbers::pi;
  if (angle > 0.5 * std::numbers::pi) angle -= std::numbers::pi;
  dom.major_angle_ = angle;
  return dom;
}

double operator_condition_estimate(const EllipseDomain& dom, int n) {
  if (n < 0) return 1.0;
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(assemble(normalized(dom), n));
  const double rcond = lu.rcond();
  return rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
}

EllipseSolution solve_ellipse(const EllipseDomain& dom, const RealPoly2& q) {
  EllipseSolution out;
  const int n = q.degree();
  if (n < 0) return out;

  const double scale = 2.0 / (dom.quadratic_form()[0] + dom.quadratic_form()[3]);
  const RealPoly2 r = scale * dom.defining_polynomial();

  const Eigen::MatrixXd a = assemble(r, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(a.rows());
  const RealPoly2 delta_q = laplacian(q);
  for (const auto& [e, c] : delta_q.terms()) rhs(basis_index(e)) = c;

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const double rcond = lu.rcond();
  out.condition_estimate = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(out.condition_estimate <= kMaxConditionEstimate)) {
    throw SingularSystem("operator p -> Laplacian(r p) is numerically singular (condition estimate " +
                         std::to_string(out.condition_estimate) + ")");
  }
  const Eigen::VectorXd x = lu.solve(rhs);

  const auto monomials = basis(n);
  RealPoly2::TermMap terms;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    terms.emplace(monomials[k], x(static_cast<Eigen::Index>(k)));
  }
  const RealPoly2 p_scaled(std::move(terms));
  out.u = q - r * p_scaled;
  out.p = scale * p_scaled;
  out.residual_laplacian_max = laplacian(out.u).max_abs_coefficient();
  return out;
}

nlohmann::json to_json(const EllipseSolution& s) {
  return {{"u", to_string(s.u)}, {"p", to_string(s.p)}, {"residual_laplacian_max", s.residual_laplacian_max}};
}

}  // namespace dirichlet
