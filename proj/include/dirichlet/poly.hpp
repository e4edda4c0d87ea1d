#pragma once

// Sparse bivariate polynomials in two monomial bases:
//   RealPoly2         -- real coefficients over x^i y^j
//   ComplexPolyZZbar  -- complex coefficients over z^n zbar^m
// Coefficients of magnitude <= kPruneTolerance are never stored, and terms
// iterate in graded-lex order (total degree ascending, then first exponent
// descending), so equality and summation order are canonical.

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace dirichlet {

using complex = std::complex<double>;

inline constexpr double kPruneTolerance = 1e-14;

struct Exponent {
  int first = 0;   // power of x (or z)
  int second = 0;  // power of y (or zbar)

  constexpr int total() const { return first + second; }
  friend constexpr bool operator==(Exponent, Exponent) = default;
};

struct GradedLex {
  constexpr bool operator()(Exponent a, Exponent b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.first > b.first;
  }
};

template <class Coef>
class SparsePoly2 {
 public:
  using coefficient_type = Coef;
  using TermMap = std::map<Exponent, Coef, GradedLex>;

  SparsePoly2() = default;

  explicit SparsePoly2(Coef constant) { add(Exponent{0, 0}, constant); }

  explicit SparsePoly2(TermMap terms) : terms_(std::move(terms)) { prune(); }

  SparsePoly2(std::initializer_list<std::pair<const Exponent, Coef>> terms) {
    for (const auto& [e, c] : terms) add(e, c);
    prune();
  }

  static SparsePoly2 monomial(int first, int second, Coef c = Coef(1)) {
    SparsePoly2 p;
    p.add(Exponent{first, second}, c);
    p.prune();
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coef coefficient(int first, int second) const {
    auto it = terms_.find(Exponent{first, second});
    return it == terms_.end() ? Coef(0) : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }

  int max_first() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }
  int max_second() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
  }

  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, static_cast<double>(std::abs(c)));
    return m;
  }

  SparsePoly2 operator-() const {
    SparsePoly2 r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend SparsePoly2 operator+(const SparsePoly2& a, const SparsePoly2& b) {
    SparsePoly2 r = a;
    for (const auto& [e, c] : b.terms_) r.add(e, c);
    r.prune();
    return r;
  }

  friend SparsePoly2 operator-(const SparsePoly2& a, const SparsePoly2& b) {
    SparsePoly2 r = a;
    for (const auto& [e, c] : b.terms_) r.add(e, -c);
    r.prune();
    return r;
  }

  friend SparsePoly2 operator*(const SparsePoly2& a, const SparsePoly2& b) {
    SparsePoly2 r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        r.add(Exponent{ea.first + eb.first, ea.second + eb.second}, ca * cb);
      }
    }
    r.prune();
    return r;
  }

  friend SparsePoly2 operator*(Coef s, const SparsePoly2& p) {
    SparsePoly2 r;
    for (const auto& [e, c] : p.terms_) r.add(e, s * c);
    r.prune();
    return r;
  }
  friend SparsePoly2 operator*(const SparsePoly2& p, Coef s) { return s * p; }

  friend bool operator==(const SparsePoly2& a, const SparsePoly2& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add(Exponent e, Coef c) {
    if (e.first < 0 || e.second < 0) return;
    terms_[e] += c;
  }

  void prune() {
    std::erase_if(terms_, [](const auto& kv) {
      return !(std::abs(kv.second) > kPruneTolerance);
    });
  }

  TermMap terms_;
};

using RealPoly2 = SparsePoly2<double>;
using ComplexPolyZZbar = SparsePoly2<complex>;

/// Largest coefficient magnitude of a - b.
template <class Coef>
double coefficient_distance(const SparsePoly2<Coef>& a, const SparsePoly2<Coef>& b) {
  double m = 0.0;
  for (const auto& [e, c] : a.terms()) {
    m = std::max(m, static_cast<double>(std::abs(c - b.coefficient(e.first, e.second))));
  }
  for (const auto& [e, c] : b.terms()) {
    if (a.terms().count(e) == 0) m = std::max(m, static_cast<double>(std::abs(c)));
  }
  return m;
}

// -- basis conversion -------------------------------------------------------

/// Substitutes x = (z + zbar)/2, y = (z - zbar)/(2i).
ComplexPolyZZbar to_zzbar(const RealPoly2& p);

/// Substitutes z = x + iy, zbar = x - iy.  Throws NonRealPolynomial unless
/// q is real-valued on the plane, i.e. coefficient(m, n) == conj(coefficient(n, m)).
RealPoly2 from_zzbar(const ComplexPolyZZbar& q);

bool is_analytic(const ComplexPolyZZbar& q);
bool is_antianalytic(const ComplexPolyZZbar& q);

// -- differential operators -------------------------------------------------

enum class Wirtinger { d_dz, d_dzbar };

ComplexPolyZZbar wirtinger(const ComplexPolyZZbar& q, Wirtinger which);

RealPoly2 partial_x(const RealPoly2& p);
RealPoly2 partial_y(const RealPoly2& p);
RealPoly2 laplacian(const RealPoly2& p);

// -- evaluation -------------------------------------------------------------

/// p(Re point, Im point).
double eval(const RealPoly2& p, complex point);

/// q(point, conj(point)).
complex eval(const ComplexPolyZZbar& q, complex point);

// -- small substitutions used by the boundary approximation ------------------

/// p(x, y) -> p(y, x).
RealPoly2 swap_variables(const RealPoly2& p);

/// p(x, y) -> p(x, -y).
RealPoly2 reflect_y(const RealPoly2& p);

// -- text form --------------------------------------------------------------
//
// Grammar: sums of products of numbers, variables (x, y for RealPoly2; z, zb
// for ComplexPolyZZbar), parenthesized sub-expressions, and non-negative
// integer powers.  Complex mode also accepts the imaginary unit `i` and
// imaginary literals such as `2.5i`.  Printing then parsing reproduces the
// same polynomial bit for bit.

RealPoly2 parse_real_poly(std::string_view text);
ComplexPolyZZbar parse_zzbar_poly(std::string_view text);

std::string to_string(const RealPoly2& p);
std::string to_string(const ComplexPolyZZbar& q);

}  // namespace dirichlet
