#pragma once

// Cut-and-project patches in the Coxeter plane.
//
// Rhombic patches live on the weight lattice. A point q with index
// r = sum k-coords mod h is lifted to Z^h at the level L = r (mod h) with
// 0 <= L - tau <= h, and the rhombus spanned at q by k_a, k_b is kept when
//
//   sum_{c != a,b} w_c ((k_c)_perp, 1) = (q_perp - shift, L - tau)
//
// has a solution with every w_c in [0, 1]: the cut plane meets the dual face
// of the lifted square. Triangular patches live on the root lattice and keep
// the Delone triangle T at p when shift - p_perp lies in the projection of
// the Voronoi face dual to T, centre_T + sum_{c free} [-1/2, 1/2] (k_c)_perp.
// Both rules give edge-to-edge tilings for a generic shift.

#include "coxtile/coxeter_projection.hpp"
#include "coxtile/root_lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coxtile {

enum class LatticeKind { root, weight };
enum class TileKind { rhombic, triangular };

const char* lattice_name(LatticeKind k);
const char* tile_kind_name(TileKind k);

struct Tile {
    std::string cls;                   // prototile id, e.g. "rhombus-m1"
    std::vector<PlanePoint> vertices;  // counter-clockwise, lexicographically smallest first
    // Canonical k-coordinates of the anchor, then the edge indices: (a, b)
    // for a rhombus, (i, j, l) for an up triangle and (-i, j, l) for a down one.
    std::vector<std::int64_t> source;

    PlanePoint centroid() const;
    double area() const;
};

struct PatchOptions {
    double radius = 8.0;                       // tile centroids within this plane radius
    std::optional<std::vector<double>> shift;  // default_shift() when unset
    double level_shift = 0.0;                  // tau; rhombic patches only
    double tolerance = 1e-9;
    int threads = 0;                           // 0: COXTILE_THREADS, else hardware
};

struct Patch {
    LatticeRank rank{1};
    LatticeKind lattice = LatticeKind::weight;
    TileKind kind = TileKind::rhombic;
    double radius = 0.0;
    std::vector<double> shift;
    double level_shift = 0.0;
    std::vector<Tile> tiles;
    std::size_t candidates = 0;  // lattice points examined
    std::size_t singular = 0;    // tile tests within tolerance of the boundary (dropped)
    std::string diagnostic;      // set when the patch is empty
};

// gamma_d = (d + 1) * 1e-4 * sqrt(2), d = 0 .. n-3.
std::vector<double> default_shift(LatticeRank rank);

// Zero shift with a tiny level shift: the patch keeps the h-fold rotation
// about the origin but not the central inversion.
PatchOptions symmetric_options(double radius);

// Throws std::invalid_argument for n < 3, radius <= 0 or a bad shift length.
Patch generate_rhombic_patch(LatticeRank rank, const PatchOptions& options);
// Throws std::invalid_argument for n < 2 or radius <= 0.
Patch generate_triangular_patch(LatticeRank rank, const PatchOptions& options);
// Rhombic tiles need the weight lattice, triangular tiles the root lattice.
Patch generate_patch(LatticeRank rank, TileKind kind, LatticeKind lattice, const PatchOptions& options);

// Canonical k-coordinates of the points of the given lattice with
// |q_par| <= parallel_radius and |q_perp| <= perp_radius (metric units).
std::vector<std::vector<std::int64_t>> lattice_points_in_cylinder(LatticeRank rank, LatticeKind lattice,
                                                                  double parallel_radius, double perp_radius);

// Lattice points at the corners of a tile, in the order of tile.vertices.
std::vector<LatticeVector> tile_lattice_vertices(const Patch& patch, const Tile& tile);
// All distinct corner points of the patch.
std::vector<LatticeVector> patch_vertices(const Patch& patch);

struct TilingReport {
    bool valid = true;
    std::size_t pairs_checked = 0;
    std::size_t overlaps = 0;      // interior overlap above tolerance
    std::size_t t_junctions = 0;   // a vertex inside another tile's edge
    std::size_t bad_contacts = 0;  // shared vertices that are not one vertex or one full edge
    std::string first_problem;
};

TilingReport check_tiling(const Patch& patch, double tol = 1e-9);

// Area of the intersection of two convex counter-clockwise polygons.
double convex_overlap_area(const std::vector<PlanePoint>& a, const std::vector<PlanePoint>& b);

struct SymmetryReport {
    int order = 1;      // largest d | 2h whose rotation maps the tiles to themselves
    PlanePoint center;  // mean of the tile centroids
};

// Throws std::invalid_argument on an empty patch.
SymmetryReport patch_symmetry_report(const Patch& patch, double tol = 1e-6);

// Sort key for class ids: catalog order rather than string order.
std::vector<int> class_order_key(const std::string& cls);
// Canonical order of the tiles (class, then vertex coordinates).
void sort_tiles(std::vector<Tile>& tiles);

}  // namespace coxtile
