#pragma once

#include <random>

#include "dirichlet/poly.hpp"

namespace dirichlet::testing {

inline RealPoly2 random_real_poly(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  RealPoly2::TermMap terms;
  for (int d = 0; d <= degree; ++d) {
    for (int i = d; i >= 0; --i) terms.emplace(Exponent{i, d - i}, coef(rng));
  }
  return RealPoly2(std::move(terms));
}

inline complex random_point(std::mt19937_64& rng, double max_radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return std::polar(max_radius * std::sqrt(unit(rng)), 2.0 * 3.141592653589793 * unit(rng));
}

}  // namespace dirichlet::testing
