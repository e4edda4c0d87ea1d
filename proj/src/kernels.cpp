#include "dirichlet/kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dirichlet/errors.hpp"

namespace dirichlet {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_integral_point(complex z) {
  if (!(std::abs(z) <= kMaxIntegralRadius)) {
    throw DomainViolation("boundary integral evaluated at |z| = " + std::to_string(std::abs(z)) +
                          " > 0.999; quadrature accuracy is not certified there");
  }
}

double parse_double(const std::string& text, const std::string& context) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("expected a number in " + context + ", got '" + text + "'");
  }
  if (used != text.size()) throw ParseError("trailing characters in " + context + ": '" + text + "'");
  return v;
}

int parse_int(const std::string& text, const std::string& context) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer in " + context + ", got '" + text + "'");
  }
  if (used != text.size()) throw ParseError("trailing characters in " + context + ": '" + text + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

QuadratureSpec::QuadratureSpec(int nodes) : nodes_(nodes) {
  if (nodes < kMinNodes) {
    throw DomainViolation("quadrature needs at least 16 nodes, got " + std::to_string(nodes));
  }
}

double QuadratureSpec::node(int j) const { return kTwoPi * j / nodes_; }

double QuadratureSpec::weight() const { return kTwoPi / nodes_; }

// -- BoundaryFunction --------------------------------------------------------

BoundaryFunction BoundaryFunction::closed_form(std::string label, std::function<complex(double)> f,
                                               bool real_valued) {
  BoundaryFunction b;
  b.kind_ = Kind::closed_form;
  b.label_ = std::move(label);
  b.f_ = std::move(f);
  b.real_valued_ = real_valued;
  return b;
}

BoundaryFunction BoundaryFunction::sampled(std::string label, std::vector<complex> values,
                                           bool real_valued) {
  if (values.size() < static_cast<std::size_t>(QuadratureSpec::kMinNodes)) {
    throw DomainViolation("sampled boundary data needs at least 16 nodes, got " +
                          std::to_string(values.size()));
  }
  BoundaryFunction b;
  b.kind_ = Kind::samples;
  b.label_ = std::move(label);
  b.samples_ = std::move(values);
  b.real_valued_ = real_valued;
  return b;
}

BoundaryFunction BoundaryFunction::constant(double c) {
  return closed_form("const:" + std::to_string(c), [c](double) { return complex(c, 0.0); }, true);
}

BoundaryFunction BoundaryFunction::cosine(int k) {
  return closed_form("cos:" + std::to_string(k),
                     [k](double t) { return complex(std::cos(k * t), 0.0); }, true);
}

BoundaryFunction BoundaryFunction::sine(int k) {
  return closed_form("sin:" + std::to_string(k),
                     [k](double t) { return complex(std::sin(k * t), 0.0); }, true);
}

BoundaryFunction BoundaryFunction::abs_sine() {
  return closed_form("abs_sin", [](double t) { return complex(std::abs(std::sin(t)), 0.0); }, true);
}

BoundaryFunction BoundaryFunction::trace(const RealPoly2& p) {
  return closed_form("poly:" + to_string(p),
                     [p](double t) { return complex(eval(p, std::polar(1.0, t)), 0.0); }, true);
}

BoundaryFunction BoundaryFunction::trace(const ComplexPolyZZbar& q) {
  bool real = true;
  for (const auto& [e, c] : q.terms()) {
    if (std::abs(c - std::conj(q.coefficient(e.second, e.first))) > 1e-12) real = false;
  }
  return closed_form("zpoly:" + to_string(q), [q](double t) { return eval(q, std::polar(1.0, t)); },
                     real);
}

complex BoundaryFunction::operator()(double theta) const {
  if (kind_ == Kind::closed_form) return f_(theta);
  const int m = static_cast<int>(samples_.size());
  double pos = std::fmod(theta, kTwoPi) / kTwoPi * m;
  if (pos < 0.0) pos += m;
  int j = static_cast<int>(std::floor(pos));
  double frac = pos - j;
  if (j >= m) {
    j -= m;
  }
  const complex lo = samples_[static_cast<std::size_t>(j)];
  if (frac == 0.0) return lo;
  const complex hi = samples_[static_cast<std::size_t>((j + 1) % m)];
  return (1.0 - frac) * lo + frac * hi;
}

int BoundaryFunction::integration_nodes(const QuadratureSpec& quad) const {
  return kind_ == Kind::samples ? static_cast<int>(samples_.size()) : quad.nodes();
}

complex BoundaryFunction::node_value(int j, int nodes) const {
  if (kind_ == Kind::samples) return samples_[static_cast<std::size_t>(j)];
  return f_(kTwoPi * j / nodes);
}

BoundaryFunction parse_boundary_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  if (head == "abs_sin" && colon == std::string::npos) return BoundaryFunction::abs_sine();
  if (colon == std::string::npos) throw ParseError("unknown boundary function '" + spec + "'");
  if (head == "const") return BoundaryFunction::constant(parse_double(arg, "const:"));
  if (head == "cos") return BoundaryFunction::cosine(parse_int(arg, "cos:"));
  if (head == "sin") return BoundaryFunction::sine(parse_int(arg, "sin:"));
  if (head == "poly") return BoundaryFunction::trace(parse_real_poly(arg));
  if (head == "zpoly") return BoundaryFunction::trace(parse_zzbar_poly(arg));
  throw ParseError("unknown boundary function '" + spec + "'");
}

BoundaryFunction parse_boundary_csv(const std::string& text, std::string label) {
  std::vector<double> thetas;
  std::vector<complex> values;
  bool real = true;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(trim(field));
    const std::string where = "CSV line " + std::to_string(line_no);
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(where + ": expected theta,value[,imag]");
    }
    thetas.push_back(parse_double(fields[0], where));
    double im = 0.0;
    if (fields.size() == 3) im = parse_double(fields[2], where);
    if (im != 0.0) real = false;
    values.emplace_back(parse_double(fields[1], where), im);
  }
  const std::size_t m = values.size();
  if (m < static_cast<std::size_t>(QuadratureSpec::kMinNodes)) {
    throw ParseError("CSV boundary data needs at least 16 rows, got " + std::to_string(m));
  }
  for (std::size_t j = 0; j < m; ++j) {
    const double expected = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
    if (std::abs(thetas[j] - expected) > 1e-9) {
      throw ParseError("CSV row " + std::to_string(j) + ": theta " + std::to_string(thetas[j]) +
                       " is not the equispaced node " + std::to_string(expected));
    }
  }
  return BoundaryFunction::sampled(std::move(label), std::move(values), real);
}

// -- kernels -------------------------------------------------------------------

double poisson_kernel(complex z, complex w, KernelForm form) {
  if (!(std::abs(z) < 1.0)) throw DomainViolation("Poisson kernel needs |z| < 1");
  if (!(std::abs(std::abs(w) - 1.0) <= 1e-12)) throw DomainViolation("Poisson kernel needs |w| = 1");
  switch (form) {
    case KernelForm::series_closed: {
      const complex zeta = z * std::conj(w);
      const complex zeta_bar = std::conj(z) * w;
      return (1.0 + zeta / (1.0 - zeta) + zeta_bar / (1.0 - zeta_bar)).real();
    }
    case KernelForm::herglotz_re:
      return ((w + z) / (w - z)).real();
    case KernelForm::modulus_sq:
      break;
  }
  return (1.0 - std::norm(z)) / std::norm(z - w);
}

double poisson_kernel_truncated(complex z, complex w, int order) {
  if (order < 0) throw DomainViolation("truncation order must be nonnegative, got " + std::to_string(order));
  const complex zeta = z * std::conj(w);
  complex power = 1.0;
  complex sum = 0.0;
  for (int n = 1; n <= order; ++n) {
    power *= zeta;
    sum += power;
  }
  // sum_n (conj z w)^n is the conjugate of sum_n (z conj w)^n.
  return 1.0 + 2.0 * sum.real();
}

double truncation_error_bound(double rho, int order) {
  if (!(rho >= 0.0 && rho < 1.0)) {
    throw DomainViolation("truncation bound needs 0 <= rho < 1, got " + std::to_string(rho));
  }
  if (order < 0) throw DomainViolation("truncation order must be non-negative");
  return 2.0 * std::pow(rho, order + 1) / (1.0 - rho);
}

KernelTruncation choose_truncation(double rho, double eps) {
  if (!(eps > 0.0)) throw DomainViolation("tolerance must be positive");
  KernelTruncation t{0, rho, truncation_error_bound(rho, 0)};
  while (t.bound > eps) {
    ++t.order;
    t.bound = truncation_error_bound(rho, t.order);
  }
  return t;
}

double poisson_integral(const BoundaryFunction& phi, complex z, const QuadratureSpec& quad) {
  check_integral_point(z);
  const int m = phi.integration_nodes(quad);
  double sum = 0.0;
  for (int j = 0; j < m; ++j) {
    const complex w = std::polar(1.0, kTwoPi * j / m);
    sum += poisson_kernel(z, w) * phi.node_value(j, m).real();
  }
  return sum / m;
}

complex truncated_poisson_integral(const BoundaryFunction& phi, complex z, int order,
                                   const QuadratureSpec& quad) {
  check_integral_point(z);
  const int m = phi.integration_nodes(quad);
  complex sum = 0.0;
  for (int j = 0; j < m; ++j) {
    const complex w = std::polar(1.0, kTwoPi * j / m);
    sum += poisson_kernel_truncated(z, w, order) * phi.node_value(j, m);
  }
  return sum / static_cast<double>(m);
}

complex analytic_part(const BoundaryFunction& phi, complex z, const QuadratureSpec& quad) {
  check_integral_point(z);
  const int m = phi.integration_nodes(quad);
  complex sum = 0.0;
  for (int j = 0; j < m; ++j) {
    const complex zeta = z * std::polar(1.0, -kTwoPi * j / m);
    sum += zeta / (1.0 - zeta) * phi.node_value(j, m);
  }
  return sum / static_cast<double>(m);
}

complex circle_average(const BoundaryFunction& phi, const QuadratureSpec& quad) {
  const int m = phi.integration_nodes(quad);
  complex sum = 0.0;
  for (int j = 0; j < m; ++j) sum += phi.node_value(j, m);
  return sum / static_cast<double>(m);
}

complex cauchy_integral(const BoundaryFunction& f, complex z, const QuadratureSpec& quad) {
  check_integral_point(z);
  const int m = f.integration_nodes(quad);
  complex sum = 0.0;
  for (int j = 0; j < m; ++j) {
    const complex zeta = z * std::polar(1.0, -kTwoPi * j / m);
    sum += f.node_value(j, m) / (1.0 - zeta);
  }
  return sum / static_cast<double>(m);
}

}  // namespace dirichlet
