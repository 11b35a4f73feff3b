#pragma once

// Acceptance window in E_perp: the projection of the Voronoi cell V(0), which
// is the zonotope sum_c [-1/2, 1/2] (k_c)_perp, translated by a shift.

#include "coxtile/coxeter_projection.hpp"
#include "coxtile/root_lattice.hpp"

#include <span>
#include <vector>

namespace coxtile {

// Centred zonotope sum_c [-1/2, 1/2] g_c in R^dims, held as facet pairs
// |<u_f, x>| <= b_f with unit normals u_f.
struct Zonotope {
    int dims = 0;
    std::vector<std::vector<double>> generators;
    std::vector<double> normals;  // facets x dims, row-major
    std::vector<double> offsets;

    std::size_t facet_count() const { return offsets.size(); }
    // Euclidean distance to the nearest facet hyperplane, negative outside.
    double slack(std::span<const double> x) const;
};

// Generators must span R^dims.
Zonotope make_zonotope(std::vector<std::vector<double>> generators, int dims);

enum class Membership { inside, outside, singular };

const char* membership_name(Membership m);

// inside when margin > tol, outside when margin < -tol, singular otherwise.
Membership classify_margin(double margin, double tol);

struct Window {
    CoxeterFrame frame;
    std::vector<std::vector<double>> perp_points;  // images of the Voronoi vertices
    std::vector<double> shift;
    double tolerance = 1e-9;
    Zonotope hull;
    std::vector<PlanePoint> boundary;  // counter-clockwise hull polygon when dim E_perp = 2
    double circumradius = 0.0;

    LatticeRank rank() const { return frame.rank(); }
    int dims() const { return hull.dims; }
};

// Throws std::invalid_argument for n < 3 or a shift of the wrong length.
Window build_window(LatticeRank rank, std::vector<double> shift, double tolerance = 1e-9);

// Signed margin of project_perp(q) - shift against the hull.
double window_margin(std::span<const double> perp, const Window& w);
Membership accept(const LatticeVector& q, const Window& w);
Membership accept_perp(std::span<const double> perp, const Window& w);

// Slow path: is project_perp(q) - shift a convex combination of perp_points?
bool accept_lp(const LatticeVector& q, const Window& w);

// Sum of integer k-coordinates mod h; defined on the weight lattice.
int lattice_index(const LatticeVector& q);
// lattice_index for n = 4; throws std::invalid_argument for other ranks.
int debruijn_index(const LatticeVector& q);

}  // namespace coxtile
