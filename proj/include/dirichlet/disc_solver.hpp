#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "dirichlet/poly.hpp"

namespace dirichlet {

/// u(z) = a0 + sum_n a_n z^n + sum_m b_m zbar^m, the canonical form of a
/// harmonic polynomial on the unit disc.  `analytic[k]` holds a_{k+1} and
/// `antianalytic[k]` holds b_{k+1}; both lists have the same length K.
struct HarmonicRep {
  complex a0{0.0, 0.0};
  std::vector<complex> analytic;
  std::vector<complex> antianalytic;
  bool real_valued = false;

  std::size_t order() const { return analytic.size(); }

  friend bool operator==(const HarmonicRep&, const HarmonicRep&) = default;
};

/// Replaces every z^n zb^m by its value on |z| = 1: 1, z^(n-m) or zb^(m-n).
HarmonicRep reduce_on_circle(const ComplexPolyZZbar& q);

/// Harmonic extension of polynomial boundary data to the unit disc.  The
/// result is flagged real-valued with a0 real and b_m == conj(a_m) exactly.
HarmonicRep solve_disc(const RealPoly2& boundary);

/// Evaluates the representation; throws OutsideDomain when |z| > 1 + 1e-12.
complex eval_harmonic(const HarmonicRep& rep, complex z);

/// The same function as a polynomial in z, zb.
ComplexPolyZZbar to_zzbar(const HarmonicRep& rep);

/// Largest coefficient difference, a0 included.
double coefficient_distance(const HarmonicRep& a, const HarmonicRep& b);

HarmonicRep operator+(const HarmonicRep& a, const HarmonicRep& b);
HarmonicRep operator*(double s, const HarmonicRep& rep);

// {"a0": [re, im], "analytic": [[re, im], ...], "antianalytic": [...], "real_valued": bool}
nlohmann::json to_json(const HarmonicRep& rep);
HarmonicRep harmonic_rep_from_json(const nlohmann::json& j);

}  // namespace dirichlet
