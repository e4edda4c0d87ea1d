#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dirichlet/disc_solver.hpp"
#include "dirichlet/ellipse_solver.hpp"
#include "dirichlet/poly.hpp"

namespace dirichlet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCheckFailed = 2;

/// Runs one batch command.  `args` excludes the program name.  Structured
/// results (and error objects) go to `out` as JSON, grids as CSV.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rows "x,y,value" over the cell-centred n x n lattice of [-1, 1]^2,
/// keeping points with x^2 + y^2 <= 1; row-major with x varying fastest.
std::string grid_export(const HarmonicRep& rep, int n);

/// Same over the square of side 2 * semi-major axis centred on the domain,
/// keeping points with r <= 0.
std::string grid_export(const RealPoly2& u, const EllipseDomain& dom, int n);

}  // namespace dirichlet::cli
