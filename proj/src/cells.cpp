#include "coxtile/cells.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace coxtile {

LatticeVector subset_sum(LatticeRank rank, IndexMask subset) {
    std::vector<std::int64_t> c(rank.h(), 0);
    for (int i = 0; i < rank.h(); ++i)
        if (subset & (IndexMask{1} << i)) c[i] = 1;
    return LatticeVector::from_k(rank, c);
}

namespace {

std::vector<IndexMask> masks_of_size(int h, int size) {
    std::vector<IndexMask> out;
    const IndexMask limit = IndexMask{1} << h;
    for (IndexMask m = 0; m < limit; ++m)
        if (std::popcount(m) == size) out.push_back(m);
    return out;
}

}  // namespace

VoronoiCell voronoi_vertices(LatticeRank rank) {
    if (rank.n() > 20)
        throw std::length_error("Voronoi vertex enumeration is limited to n <= 20 (2^(n+1) - 2 vertices)");
    VoronoiCell cell{rank, {}, {}};
    for (int size = 1; size <= rank.n(); ++size)
        for (IndexMask m : masks_of_size(rank.h(), size)) {
            cell.vertices.push_back(subset_sum(rank, m));
            cell.subsets.push_back(m);
        }
    return cell;
}

std::vector<RhombicFace> voronoi_two_faces(LatticeRank rank) {
    if (rank.n() < 3) throw std::invalid_argument("V(0) has no rhombic 2-faces below n = 3");
    if (rank.n() > 20) throw std::length_error("2-face enumeration is limited to n <= 20");
    const int h = rank.h();
    std::vector<RhombicFace> faces;
    for (int a = 1; a <= h; ++a)
        for (int b = a + 1; b <= h; ++b) {
            const IndexMask ab = (IndexMask{1} << (a - 1)) | (IndexMask{1} << (b - 1));
            for (int size = 1; size <= rank.n() - 2; ++size)
                for (IndexMask s : masks_of_size(h, size)) {
                    if (s & ab) continue;
                    const IndexMask sa = s | (IndexMask{1} << (a - 1));
                    const IndexMask sb = s | (IndexMask{1} << (b - 1));
                    faces.push_back(RhombicFace{
                        s, a, b,
                        {subset_sum(rank, s), subset_sum(rank, sa), subset_sum(rank, s | ab), subset_sum(rank, sb)}});
                }
        }
    return faces;
}

std::vector<LatticeVector> delone_orbit(LatticeRank rank, int i) {
    if (i < 1 || i > rank.n())
        throw std::out_of_range("orbit index " + std::to_string(i) + " outside 1.." + std::to_string(rank.n()));
    std::vector<LatticeVector> out;
    for (IndexMask m : masks_of_size(rank.h(), i)) out.push_back(subset_sum(rank, m));
    return out;
}

VoronoiVertexInfo classify_voronoi_vertex(const LatticeVector& v) {
    const LatticeRank rank = v.rank();
    const auto c = v.k_coords();
    // Canonical coordinates of sum_S k_i are 1_S (last index not in S) or
    // 1_S - 1 (last index in S).
    IndexMask subset = 0;
    bool zero_one = true;
    bool minus_one_zero = true;
    for (const auto& x : c) {
        zero_one = zero_one && (x == Rational(0) || x == Rational(1));
        minus_one_zero = minus_one_zero && (x == Rational(0) || x == Rational(-1));
    }
    if (zero_one) {
        for (int i = 0; i < rank.h(); ++i)
            if (c[i] == Rational(1)) subset |= IndexMask{1} << i;
    } else if (minus_one_zero) {
        for (int i = 0; i < rank.h(); ++i)
            if (c[i] == Rational(0)) subset |= IndexMask{1} << i;
    } else {
        throw std::invalid_argument("not a Voronoi vertex: " + v.to_string());
    }
    const int size = std::popcount(subset);
    if (size < 1 || size > rank.n()) throw std::invalid_argument("not a Voronoi vertex: " + v.to_string());
    return {size, subset};
}

std::vector<LatticeVector> delone_cell_at_vertex(const LatticeVector& v) {
    const auto info = classify_voronoi_vertex(v);
    std::vector<LatticeVector> out;
    for (const auto& w : delone_orbit(v.rank(), v.rank().h() - info.orbit)) out.push_back(v + w);
    std::sort(out.begin(), out.end());
    return out;
}

std::array<LatticeVector, 3> DeloneFace::edges() const {
    return {vertices[1] - vertices[0], vertices[2] - vertices[1], vertices[0] - vertices[2]};
}

DeloneFace make_delone_face(const LatticeVector& anchor, int i, int j, int l, TriangleOrientation orientation) {
    const LatticeRank rank = anchor.rank();
    const int h = rank.h();
    for (int x : {i, j, l})
        if (x < 1 || x > h) throw std::out_of_range("triangle index outside 1..n+1");
    if (i == j || j == l || i == l) throw std::invalid_argument("triangle indices must be distinct");
    auto k = [&](int idx) {
        std::vector<std::int64_t> c(h, 0);
        c[idx - 1] = 1;
        return LatticeVector::from_k(rank, c);
    };
    const LatticeVector r1 = k(i) - k(j);
    const LatticeVector r2 = k(i) - k(l);
    DeloneFace f{anchor, {i, j, l}, orientation, {anchor, anchor, anchor}};
    if (orientation == TriangleOrientation::up) {
        f.vertices[1] = anchor + r1;
        f.vertices[2] = anchor + r2;
    } else {
        f.vertices[1] = anchor - r1;
        f.vertices[2] = anchor - r2;
    }
    return f;
}

std::vector<DeloneFace> delone_two_faces_at(const LatticeVector& p) {
    if (!p.in_root_lattice()) throw std::invalid_argument("anchor is not a root-lattice point: " + p.to_string());
    const int h = p.rank().h();
    std::vector<DeloneFace> out;
    for (auto orientation : {TriangleOrientation::up, TriangleOrientation::down})
        for (int i = 1; i <= h; ++i)
            for (int j = 1; j <= h; ++j)
                for (int l = j + 1; l <= h; ++l) {
                    if (j == i || l == i) continue;
                    out.push_back(make_delone_face(p, i, j, l, orientation));
                }
    return out;
}

}  // namespace coxtile
