#pragma once

// Integer classification of the rhombic and triangular prototiles obtained by
// projecting Voronoi and Delone 2-faces onto the Coxeter plane.
//
// A rhombus spanned by (k_i)_par and (k_j)_par has angles 2 pi d / h and
// pi - 2 pi d / h, d = |i - j| mod h. Its class is the unordered angle pair,
// keyed by the smallest m with angles (2 pi m / h, pi - 2 pi m / h); for even
// h the parameters m and h/2 - m name the same rhombus, and d = h/2 collapses
// to a segment. A triangle on (k_i, k_j, k_l)_par has angles n_a pi / h with
// n_1 + n_2 + n_3 = h.

#include "coxtile/coxeter_projection.hpp"
#include "coxtile/rational.hpp"
#include "coxtile/root_lattice.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace coxtile {

struct RhombusClass {
    int h = 0;
    int m = 0;

    // Angles as multiples of pi: (2m/h, 1 - 2m/h).
    std::array<Rational, 2> angles_over_pi() const;
    std::array<double, 2> angles_deg() const;
    bool is_square() const { return 4 * m == h; }
    std::string id() const;  // "rhombus-m<m>"

    friend bool operator==(const RhombusClass&, const RhombusClass&) = default;
    friend auto operator<=>(const RhombusClass&, const RhombusClass&) = default;
};

struct TriangleClass {
    int h = 0;
    std::array<int, 3> parts{};  // ascending, positive, sum h

    std::array<Rational, 3> angles_over_pi() const;
    std::array<double, 3> angles_deg() const;
    // Side opposite the angle n_a pi / h has length 2 sin(n_a pi / h).
    std::array<double, 3> edge_lengths() const;
    std::string id() const;  // "triangle-a-b-c"

    friend bool operator==(const TriangleClass&, const TriangleClass&) = default;
    friend auto operator<=>(const TriangleClass&, const TriangleClass&) = default;
};

// Canonical class parameter for the angle 2 pi d / h, or nullopt when the
// rhombus degenerates (2d = 0 mod h).
std::optional<int> canonical_rhombus_parameter(int h, int d);

// Throws std::invalid_argument for n < 3.
std::vector<RhombusClass> rhombic_prototiles(LatticeRank rank);

// nullopt means the projected rhombus is degenerate (the two edges are
// antiparallel, possible only for even h). Throws std::invalid_argument when
// i == j and std::out_of_range outside 1..h.
std::optional<RhombusClass> classify_rhombus(int i, int j, LatticeRank rank);

// All partitions of h into three positive parts, lexicographic. Throws
// std::invalid_argument for n < 2.
std::vector<TriangleClass> triangular_prototiles(LatticeRank rank);

// Total on distinct indices: projected triangles never degenerate.
// Throws std::invalid_argument on a repeated index.
TriangleClass classify_triangle(int i, int j, int l, LatticeRank rank);

// Number of partitions of h into exactly three positive parts.
int three_part_partition_count(int h);

struct Polygon {
    std::vector<PlanePoint> vertices;  // counter-clockwise

    std::vector<double> interior_angles_deg() const;
    std::vector<double> edge_lengths() const;
    double signed_area() const;
};

struct DartAndKite {
    Polygon kite;  // two (1,2,2) triangles glued on a long edge
    Polygon dart;  // two (1,1,3) triangles glued on a short edge
};

// Built for h = 5 only (throws std::invalid_argument otherwise); the long
// edge has unit length.
DartAndKite dart_and_kite(LatticeRank rank);

}  // namespace coxtile
