#pragma once

// Poisson and Cauchy kernels of the unit disc, the truncated kernel K_N with
// its geometric error bound, and trapezoidal quadrature of the boundary
// integrals they define.

#include <functional>
#include <string>
#include <vector>

#include "dirichlet/poly.hpp"

namespace dirichlet {

/// Composite trapezoid rule on [0, 2pi): nodes 2 pi j / M, weights 2 pi / M.
class QuadratureSpec {
 public:
  static constexpr int kDefaultNodes = 512;
  static constexpr int kMinNodes = 16;

  QuadratureSpec() = default;
  /// Throws DomainViolation when nodes < 16.
  explicit QuadratureSpec(int nodes);

  int nodes() const { return nodes_; }
  double node(int j) const;
  double weight() const;

 private:
  int nodes_ = kDefaultNodes;
};

/// Data on the unit circle as a function of the angle.  Closed-form data is
/// evaluable anywhere; sampled data lives on M equispaced nodes and is
/// integrated on exactly those nodes.  Off-node evaluation of sampled data
/// interpolates linearly (periodically) between neighbouring samples.
class BoundaryFunction {
 public:
  enum class Kind { closed_form, samples };

  static BoundaryFunction closed_form(std::string label, std::function<complex(double)> f,
                                      bool real_valued);
  /// Throws DomainViolation for fewer than 16 samples.
  static BoundaryFunction sampled(std::string label, std::vector<complex> values, bool real_valued);

  static BoundaryFunction constant(double c);
  static BoundaryFunction cosine(int k);
  static BoundaryFunction sine(int k);
  static BoundaryFunction abs_sine();
  /// theta -> p(cos theta, sin theta).
  static BoundaryFunction trace(const RealPoly2& p);
  /// theta -> q(e^{i theta}, e^{-i theta}); real-valued only if q is.
  static BoundaryFunction trace(const ComplexPolyZZbar& q);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  bool real_valued() const { return real_valued_; }
  const std::vector<complex>& samples() const { return samples_; }

  complex operator()(double theta) const;
  double real_at(double theta) const { return (*this)(theta).real(); }

  /// Node count used to integrate this function: its own sample count for
  /// sampled data, `quad.nodes()` otherwise.
  int integration_nodes(const QuadratureSpec& quad) const;
  /// Value at node j of an M-node equispaced grid, M == integration_nodes(quad).
  complex node_value(int j, int nodes) const;

 private:
  Kind kind_ = Kind::closed_form;
  std::string label_;
  std::function<complex(double)> f_;
  std::vector<complex> samples_;
  bool real_valued_ = true;
};

/// Parses `const:c`, `cos:k`, `sin:k`, `abs_sin`, `poly:<x,y polynomial>` or
/// `zpoly:<z,zb polynomial>`.  Throws ParseError.
BoundaryFunction parse_boundary_spec(const std::string& spec);

/// Parses CSV rows `theta,value[,imag]` (blank lines and '#' comments
/// skipped).  Thetas must be the equispaced nodes 2 pi j / M in order.
BoundaryFunction parse_boundary_csv(const std::string& text, std::string label = "csv");

enum class KernelForm { series_closed, herglotz_re, modulus_sq };

/// Poisson kernel K(z, w) for |z| < 1, |w| = 1 (within 1e-12); throws
/// DomainViolation otherwise.
double poisson_kernel(complex z, complex w, KernelForm form = KernelForm::modulus_sq);

/// K_N(z, w) = 1 + sum_{n=1..N} (z conj w)^n + sum_{n=1..N} (conj z w)^n.
double poisson_kernel_truncated(complex z, complex w, int order);

struct KernelTruncation {
  int order = 0;
  double rho_max = 0.0;
  double bound = 0.0;
};

/// 2 rho^(N+1) / (1 - rho); throws DomainViolation unless 0 <= rho < 1.
double truncation_error_bound(double rho, int order);

/// Smallest N with truncation_error_bound(rho, N) <= eps.
KernelTruncation choose_truncation(double rho, double eps);

/// Largest |z| at which the boundary integrals below are evaluated.
inline constexpr double kMaxIntegralRadius = 0.999;

/// (1/2pi) int K(z, e^{it}) phi(t) dt, real part of phi.
double poisson_integral(const BoundaryFunction& phi, complex z, const QuadratureSpec& quad = {});

/// (1/2pi) int K_N(z, e^{it}) phi(t) dt for possibly complex phi.
complex truncated_poisson_integral(const BoundaryFunction& phi, complex z, int order,
                                   const QuadratureSpec& quad = {});

/// h(z) = (1/2pi) int z e^{-it} / (1 - z e^{-it}) phi(t) dt, so that
/// u = a0 + h + conj(h) with a0 the circle average of phi.
complex analytic_part(const BoundaryFunction& phi, complex z, const QuadratureSpec& quad = {});

/// (1/2pi) int phi(t) dt.
complex circle_average(const BoundaryFunction& phi, const QuadratureSpec& quad = {});

/// (1/2pi) int f(e^{it}) / (1 - z e^{-it}) dt.
complex cauchy_integral(const BoundaryFunction& f, complex z, const QuadratureSpec& quad = {});

}  // namespace dirichlet
