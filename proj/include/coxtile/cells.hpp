#pragma once

// Voronoi and Delone cells of the root lattice A_n.
//
// The Voronoi cell V(0) has the 2^{n+1} - 2 vertices sum_{i in S} k_i,
// 1 <= |S| <= n; the subsets of size i form the orbit of omega_i. Its 2-faces
// are the rhombi {S, S + k_a, S + k_b, S + k_a + k_b} with a, b outside S and
// 1 <= |S| <= n - 2. Delone 2-faces are equilateral triangles with root edges.

#include "coxtile/root_lattice.hpp"

#include <array>
#include <vector>

namespace coxtile {

// Subsets are bitmasks over {1..n+1}: bit (i-1) stands for k_i.
using IndexMask = std::uint32_t;

LatticeVector subset_sum(LatticeRank rank, IndexMask subset);

struct VoronoiCell {
    LatticeRank rank;
    std::vector<LatticeVector> vertices;  // ordered by |S|, then by mask
    std::vector<IndexMask> subsets;       // parallel to vertices
};

// Throws std::length_error for n > 20.
VoronoiCell voronoi_vertices(LatticeRank rank);

struct RhombicFace {
    IndexMask base = 0;
    int a = 0;  // 1-based, a < b
    int b = 0;
    // S, S + k_a, S + k_a + k_b, S + k_b (cyclic order).
    std::array<LatticeVector, 4> vertices;
};

// Throws std::invalid_argument for n < 3.
std::vector<RhombicFace> voronoi_two_faces(LatticeRank rank);

// Sums of i distinct k's; throws std::out_of_range unless 1 <= i <= n.
std::vector<LatticeVector> delone_orbit(LatticeRank rank, int i);

// Which orbit a Voronoi vertex belongs to, with its subset; throws
// std::invalid_argument if v is not a vertex of V(0).
struct VoronoiVertexInfo {
    int orbit = 0;
    IndexMask subset = 0;
};
VoronoiVertexInfo classify_voronoi_vertex(const LatticeVector& v);

// Delone cell centred on the Voronoi vertex v of orbit i:
// { v + w : w in orbit(omega_{n+1-i}) }.
std::vector<LatticeVector> delone_cell_at_vertex(const LatticeVector& v);

enum class TriangleOrientation {
    up,    // {p, p + k_i - k_j, p + k_i - k_l}: shared +k_i
    down,  // {p, p + k_j - k_i, p + k_l - k_i}: shared -k_i
};

struct DeloneFace {
    LatticeVector anchor;
    std::array<int, 3> indices{};  // (i, j, l), i the shared index
    TriangleOrientation orientation = TriangleOrientation::up;
    std::array<LatticeVector, 3> vertices;
    // Edge vectors v1 - v0, v2 - v1, v0 - v2.
    std::array<LatticeVector, 3> edges() const;
};

DeloneFace make_delone_face(const LatticeVector& anchor, int i, int j, int l, TriangleOrientation orientation);

// All Delone 2-faces incident to the root-lattice point p: 6 C(n+1, 3)
// triangles. Throws std::invalid_argument if p is not in the root lattice.
std::vector<DeloneFace> delone_two_faces_at(const LatticeVector& p);

}  // namespace coxtile
