#include "dirichlet/poly.hpp"

#include <cmath>
#include <vector>

#include "dirichlet/errors.hpp"

namespace dirichlet {
namespace {

// Pascal's triangle in double; exact up to row 56, correctly rounded-ish beyond.
class BinomialTable {
 public:
  explicit BinomialTable(int rows) : rows_(rows + 1) {
    table_.resize(static_cast<std::size_t>(rows_) * rows_, 0.0);
    for (int n = 0; n < rows_; ++n) {
      at(n, 0) = 1.0;
      for (int k = 1; k <= n; ++k) at(n, k) = at(n - 1, k - 1) + (k < n ? at(n - 1, k) : 0.0);
    }
  }
  double operator()(int n, int k) const { return table_[static_cast<std::size_t>(n) * rows_ + k]; }

 private:
  double& at(int n, int k) { return table_[static_cast<std::size_t>(n) * rows_ + k]; }
  int rows_;
  std::vector<double> table_;
};

// Dense accumulator indexed by (first, second) exponents up to a total degree.
template <class Coef>
class DenseAccumulator {
 public:
  explicit DenseAccumulator(int degree) : side_(degree + 1), cells_(side_ * side_, Coef(0)) {}

  Coef& operator()(int first, int second) { return cells_[first * side_ + second]; }

  SparsePoly2<Coef> build() const {
    typename SparsePoly2<Coef>::TermMap terms;
    for (int i = 0; i < side_; ++i) {
      for (int j = 0; i + j < side_; ++j) {
        const Coef c = cells_[i * side_ + j];
        if (std::abs(c) > kPruneTolerance) terms.emplace(Exponent{i, j}, c);
      }
    }
    return SparsePoly2<Coef>(std::move(terms));
  }

 private:
  int side_;
  std::vector<Coef> cells_;
};

template <class Coef>
std::vector<Coef> powers(Coef base, int max_power) {
  std::vector<Coef> out(static_cast<std::size_t>(std::max(max_power, 0)) + 1, Coef(1));
  for (int k = 1; k <= max_power; ++k) out[k] = out[k - 1] * base;
  return out;
}

}  // namespace

ComplexPolyZZbar to_zzbar(const RealPoly2& p) {
  const int degree = p.degree();
  if (degree < 0) return {};
  const BinomialTable binom(degree);
  DenseAccumulator<complex> acc(degree);
  // x^i y^j = 2^-(i+j) (-i)^j (z + zb)^i (z - zb)^j
  const auto minus_i_pow = powers(complex(0.0, -1.0), degree);
  for (const auto& [e, c] : p.terms()) {
    const int i = e.first;
    const int j = e.second;
    const complex scale = c * std::ldexp(1.0, -(i + j)) * minus_i_pow[j];
    for (int a = 0; a <= i; ++a) {
      for (int b = 0; b <= j; ++b) {
        const double sign = ((j - b) % 2 == 0) ? 1.0 : -1.0;
        acc(a + b, (i - a) + (j - b)) += scale * (binom(i, a) * binom(j, b) * sign);
      }
    }
  }
  return acc.build();
}

RealPoly2 from_zzbar(const ComplexPolyZZbar& q) {
  for (const auto& [e, c] : q.terms()) {
    const complex mirror = q.coefficient(e.second, e.first);
    if (std::abs(c - std::conj(mirror)) > 1e-12 * std::max(1.0, std::abs(c))) {
      throw NonRealPolynomial("polynomial in z, zb is not real-valued: coefficient of z^" +
                              std::to_string(e.first) + "*zb^" + std::to_string(e.second) +
                              " is not the conjugate of its mirror term");
    }
  }
  const int degree = q.degree();
  if (degree < 0) return {};
  const BinomialTable binom(degree);
  DenseAccumulator<complex> acc(degree);
  // z^n zb^m = sum_a sum_b C(n,a) C(m,b) i^a (-i)^b x^(n+m-a-b) y^(a+b)
  const complex i_unit(0.0, 1.0);
  const auto i_pow = powers(i_unit, degree);
  const auto minus_i_pow = powers(-i_unit, degree);
  for (const auto& [e, c] : q.terms()) {
    const int n = e.first;
    const int m = e.second;
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= m; ++b) {
        acc(n + m - a - b, a + b) += c * (binom(n, a) * binom(m, b)) * i_pow[a] * minus_i_pow[b];
      }
    }
  }
  const auto complex_result = acc.build();
  RealPoly2::TermMap terms;
  for (const auto& [e, c] : complex_result.terms()) terms.emplace(e, c.real());
  return RealPoly2(std::move(terms));
}

bool is_analytic(const ComplexPolyZZbar& q) {
  for (const auto& [e, c] : q.terms()) {
    if (e.second != 0) return false;
  }
  return true;
}

bool is_antianalytic(const ComplexPolyZZbar& q) {
  for (const auto& [e, c] : q.terms()) {
    if (e.first != 0) return false;
  }
  return true;
}

ComplexPolyZZbar wirtinger(const ComplexPolyZZbar& q, Wirtinger which) {
  ComplexPolyZZbar::TermMap terms;
  for (const auto& [e, c] : q.terms()) {
    if (which == Wirtinger::d_dz) {
      if (e.first > 0) terms[Exponent{e.first - 1, e.second}] += c * static_cast<double>(e.first);
    } else {
      if (e.second > 0) terms[Exponent{e.first, e.second - 1}] += c * static_cast<double>(e.second);
    }
  }
  return ComplexPolyZZbar(std::move(terms));
}

RealPoly2 partial_x(const RealPoly2& p) {
  RealPoly2::TermMap terms;
  for (const auto& [e, c] : p.terms()) {
    if (e.first > 0) terms[Exponent{e.first - 1, e.second}] += c * e.first;
  }
  return RealPoly2(std::move(terms));
}

RealPoly2 partial_y(const RealPoly2& p) {
  RealPoly2::TermMap terms;
  for (const auto& [e, c] : p.terms()) {
    if (e.second > 0) terms[Exponent{e.first, e.second - 1}] += c * e.second;
  }
  return RealPoly2(std::move(terms));
}

RealPoly2 laplacian(const RealPoly2& p) {
  RealPoly2::TermMap terms;
  for (const auto& [e, c] : p.terms()) {
    const int i = e.first;
    const int j = e.second;
    if (i >= 2) terms[Exponent{i - 2, j}] += c * i * (i - 1);
    if (j >= 2) terms[Exponent{i, j - 2}] += c * j * (j - 1);
  }
  return RealPoly2(std::move(terms));
}

double eval(const RealPoly2& p, complex point) {
  if (p.is_zero()) return 0.0;
  const auto xp = powers(point.real(), p.max_first());
  const auto yp = powers(point.imag(), p.max_second());
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) sum += c * xp[e.first] * yp[e.second];
  return sum;
}

complex eval(const ComplexPolyZZbar& q, complex point) {
  if (q.is_zero()) return {};
  const auto zp = powers(point, q.max_first());
  const auto zbp = powers(std::conj(point), q.max_second());
  complex sum = 0.0;
  for (const auto& [e, c] : q.terms()) sum += c * zp[e.first] * zbp[e.second];
  return sum;
}

RealPoly2 swap_variables(const RealPoly2& p) {
  RealPoly2::TermMap terms;
  for (const auto& [e, c] : p.terms()) terms.emplace(Exponent{e.second, e.first}, c);
  return RealPoly2(std::move(terms));
}

RealPoly2 reflect_y(const RealPoly2& p) {
  RealPoly2::TermMap terms;
  for (const auto& [e, c] : p.terms()) terms.emplace(e, e.second % 2 == 0 ? c : -c);
  return RealPoly2(std::move(terms));
}

}  // namespace dirichlet
