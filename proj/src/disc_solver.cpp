#include "dirichlet/disc_solver.hpp"

#include <algorithm>
#include <cstdlib>

#include "dirichlet/errors.hpp"

namespace dirichlet {
namespace {

void resize_to(HarmonicRep& rep, std::size_t k) {
  rep.analytic.resize(k, complex{});
  rep.antianalytic.resize(k, complex{});
}

nlohmann::json pair_of(complex c) { return nlohmann::json::array({c.real(), c.imag()}); }

complex complex_of(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("expected a [re, im] pair, got " + j.dump());
  }
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

HarmonicRep reduce_on_circle(const ComplexPolyZZbar& q) {
  HarmonicRep rep;
  std::size_t k = 0;
  for (const auto& [e, c] : q.terms()) {
    k = std::max<std::size_t>(k, static_cast<std::size_t>(std::abs(e.first - e.second)));
  }
  resize_to(rep, k);
  for (const auto& [e, c] : q.terms()) {
    const int shift = e.first - e.second;
    if (shift == 0) {
      rep.a0 += c;
    } else if (shift > 0) {
      rep.analytic[shift - 1] += c;
    } else {
      rep.antianalytic[-shift - 1] += c;
    }
  }
  return rep;
}

HarmonicRep solve_disc(const RealPoly2& boundary) {
  HarmonicRep rep = reduce_on_circle(to_zzbar(boundary));
  // The z^k and zb^k coefficients of a real polynomial are conjugate up to
  // rounding; make the symmetry exact.
  rep.a0 = complex(rep.a0.real(), 0.0);
  for (std::size_t k = 0; k < rep.order(); ++k) {
    const complex a = 0.5 * (rep.analytic[k] + std::conj(rep.antianalytic[k]));
    rep.analytic[k] = a;
    rep.antianalytic[k] = std::conj(a);
  }
  rep.real_valued = true;
  return rep;
}

complex eval_harmonic(const HarmonicRep& rep, complex z) {
  if (std::abs(z) > 1.0 + 1e-12) {
    throw OutsideDomain("harmonic representation evaluated outside the closed unit disc");
  }
  complex sum = rep.a0;
  complex zp = 1.0;
  for (const complex& a : rep.analytic) {
    zp *= z;
    sum += a * zp;
  }
  const complex zb = std::conj(z);
  complex zbp = 1.0;
  for (const complex& b : rep.antianalytic) {
    zbp *= zb;
    sum += b * zbp;
  }
  return sum;
}

ComplexPolyZZbar to_zzbar(const HarmonicRep& rep) {
  ComplexPolyZZbar::TermMap terms;
  terms[Exponent{0, 0}] += rep.a0;
  for (std::size_t k = 0; k < rep.order(); ++k) {
    const int n = static_cast<int>(k) + 1;
    terms[Exponent{n, 0}] += rep.analytic[k];
    terms[Exponent{0, n}] += rep.antianalytic[k];
  }
  return ComplexPolyZZbar(std::move(terms));
}

double coefficient_distance(const HarmonicRep& a, const HarmonicRep& b) {
  double d = std::abs(a.a0 - b.a0);
  const std::size_t k = std::max(a.order(), b.order());
  auto at = [](const std::vector<complex>& v, std::size_t i) { return i < v.size() ? v[i] : complex{}; };
  for (std::size_t i = 0; i < k; ++i) {
    d = std::max(d, std::abs(at(a.analytic, i) - at(b.analytic, i)));
    d = std::max(d, std::abs(at(a.antianalytic, i) - at(b.antianalytic, i)));
  }
  return d;
}

HarmonicRep operator+(const HarmonicRep& a, const HarmonicRep& b) {
  HarmonicRep r = a;
  resize_to(r, std::max(a.order(), b.order()));
  r.a0 += b.a0;
  for (std::size_t i = 0; i < b.order(); ++i) {
    r.analytic[i] += b.analytic[i];
    r.antianalytic[i] += b.antianalytic[i];
  }
  r.real_valued = a.real_valued && b.real_valued;
  return r;
}

HarmonicRep operator*(double s, const HarmonicRep& rep) {
  HarmonicRep r = rep;
  r.a0 *= s;
  for (auto& c : r.analytic) c *= s;
  for (auto& c : r.antianalytic) c *= s;
  return r;
}

nlohmann::json to_json(const HarmonicRep& rep) {
  nlohmann::json analytic = nlohmann::json::array();
  nlohmann::json antianalytic = nlohmann::json::array();
  for (const complex& c : rep.analytic) analytic.push_back(pair_of(c));
  for (const complex& c : rep.antianalytic) antianalytic.push_back(pair_of(c));
  return {{"a0", pair_of(rep.a0)},
          {"analytic", analytic},
          {"antianalytic", antianalytic},
          {"real_valued", rep.real_valued}};
}

HarmonicRep harmonic_rep_from_json(const nlohmann::json& j) {
  try {
    HarmonicRep rep;
    rep.a0 = complex_of(j.at("a0"));
    for (const auto& c : j.at("analytic")) rep.analytic.push_back(complex_of(c));
    for (const auto& c : j.at("antianalytic")) rep.antianalytic.push_back(complex_of(c));
    if (rep.analytic.size() != rep.antianalytic.size()) {
      throw ParseError("analytic and antianalytic lists differ in length");
    }
    rep.real_valued = j.at("real_valued").get<bool>();
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed HarmonicRep JSON: ") + e.what());
  }
}

}  // namespace dirichlet
