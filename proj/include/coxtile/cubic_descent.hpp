#pragma once

// Descent from the cubic lattice Z^{n+1} to A_n. Substituting
// l_i = l_0/(n+1) + k_i sends the cube vertex 1/2(s_1 l_1 + ... + s_h l_h) to
//
//   -(sum of k_i over the minus signs)  +  (sum s_i / 2h) l_0,
//
// so the vertices with j minus signs land on the orbit of omega_j (j = 1..n)
// and the two diagonal vertices land on 0.

#include "coxtile/check.hpp"
#include "coxtile/rational.hpp"
#include "coxtile/root_lattice.hpp"

#include <string>
#include <vector>

namespace coxtile {

struct CubeVertex {
    std::vector<int> signs;  // +1 / -1, one per l_i

    // Parses "+-+..."; throws std::invalid_argument on other characters.
    static CubeVertex parse(const std::string& text);
    int minus_count() const;
    std::string to_string() const;
};

// A vector of the l-space written as (A_n part) + coefficient * l_0.
struct LiftedVector {
    LatticeVector k_part;
    Rational l0;

    friend bool operator==(const LiftedVector& a, const LiftedVector& b) {
        return a.k_part == b.k_part && a.l0 == b.l0;
    }
    std::string to_string() const;
};

// 1/2 sum_i s_i l_i with l_i = k_i + l_0/h. Throws std::invalid_argument
// unless the vertex has h entries, each +1 or -1.
LiftedVector lift_cube_vertex(const CubeVertex& v, LatticeRank rank);
// Drops the l_0 component.
LatticeVector project_cube_vertex(const CubeVertex& v, LatticeRank rank);

// All 2^h sign patterns, in binary order (bit i set means s_{i+1} = -1).
std::vector<CubeVertex> cube_vertices(LatticeRank rank);

// Preimage sizes: [all plus, all minus, one minus, ..., n minus].
std::vector<long long> cube_orbit_decomposition(LatticeRank rank);

// The image of the cube vertex set is V(0)'s vertices plus 0, with the
// binomial preimage sizes.
CheckResult image_law_check(LatticeRank rank);

// k_i - ((h-2)/2h) l_0 = 1/2 (l_i - sum_{j != i} l_j) for every i, exactly,
// and the identities sum to sum k_i = 0.
CheckResult k_lift_check(LatticeRank rank);

// The 3-cube 1/2(l_1 +- l_2 +- l_3 +- l_4 - l_5) of A_4 maps onto a
// rhombohedron of V(0) centred at 1/2(k_1 - k_5), with face angle arccos(-1/4).
struct RhombohedronReport {
    std::vector<CubeVertex> vertices;
    std::vector<LatticeVector> images;
    std::vector<LatticeVector> expected;
    LatticeVector center;
    double face_angle_deg = 0.0;
    bool images_match = false;
    bool center_match = false;
    std::string diff;
};
RhombohedronReport rhombohedron_descent(LatticeRank rank);  // n = 4 only

// A_2: the six non-diagonal vertices of the 3-cube map to {+-k_1, +-k_2, +-k_3}.
CheckResult hexagon_check();

// Every cube edge parallel to l_i maps to +-k_i.
CheckResult edge_image_check(LatticeRank rank);

}  // namespace coxtile
