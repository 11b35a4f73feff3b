#pragma once

// Dense phase-1 simplex for small feasibility problems. Used as the slow,
// independent membership test behind the zonotope facet test.

#include "coxtile/matrix.hpp"

#include <span>
#include <vector>

namespace coxtile {

// Is { x : A x = b, lo <= x <= hi } nonempty? Entries of hi may be +inf.
// Bland's rule, so it terminates; meant for a few dozen variables.
bool linear_feasible(const Matrix<double>& a, std::span<const double> b, std::span<const double> lo,
                     std::span<const double> hi, double tol = 1e-9);

// Is x a convex combination of the given points?
bool in_convex_hull(const std::vector<std::vector<double>>& points, std::span<const double> x, double tol = 1e-9);

}  // namespace coxtile
