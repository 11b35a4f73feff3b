#pragma once

// Exact face lattice of a full-dimensional integer polytope, by brute force:
// every d-subset of points spanning a supporting hyperplane yields a facet,
// and the faces are the intersections of facets. Independent of the
// combinatorial enumerators it is used to check; meant for up to ~64 points.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Point = std::vector<std::int64_t>;
using VertexSet = std::uint64_t;  // bit i: point i

// Rank of an integer matrix by fraction-free elimination.
inline int integer_rank(std::vector<std::vector<__int128>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            const __int128 a = m[rank][c], b = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * a - m[rank][k] * b;
            __int128 g = 0;
            for (auto x : m[r]) {
                __int128 y = x < 0 ? -x : x;
                while (y) {
                    const __int128 t = g % y;
                    g = y;
                    y = t;
                }
            }
            if (g > 1)
                for (auto& x : m[r]) x /= g;
        }
        ++rank;
    }
    return rank;
}

constexpr int kMaxDim = 6;
using Row = std::array<std::int64_t, kMaxDim>;

// Laplace expansion of the n x n matrix formed by rows `rows` and the
// columns whose bits are set in `cols`; n is at most 5 here.
inline std::int64_t minor_det(const Row* rows, int n, unsigned cols) {
    if (n == 0) return 1;
    std::int64_t total = 0;
    int sign = 1;
    for (int c = 0; c < kMaxDim; ++c) {
        if (!(cols >> c & 1)) continue;
        if (rows[0][c] != 0) total += sign * rows[0][c] * minor_det(rows + 1, n - 1, cols & ~(1u << c));
        sign = -sign;
    }
    return total;
}

// Affine dimension of the points selected by the mask.
inline int affine_dim(const std::vector<Point>& pts, VertexSet mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (mask >> i & 1) idx.push_back(i);
    if (idx.empty()) return -1;
    std::vector<std::vector<__int128>> rows;
    for (std::size_t t = 1; t < idx.size(); ++t) {
        std::vector<__int128> r;
        for (std::size_t c = 0; c < pts[0].size(); ++c) r.push_back(pts[idx[t]][c] - pts[idx[0]][c]);
        rows.push_back(r);
    }
    return integer_rank(rows);
}

struct FaceLattice {
    int dim = 0;
    std::vector<VertexSet> facets;
    std::set<VertexSet> faces;  // every proper nonempty face

    std::vector<VertexSet> faces_of_dim(const std::vector<Point>& pts, int d) const {
        std::vector<VertexSet> out;
        for (VertexSet f : faces)
            if (affine_dim(pts, f) == d) out.push_back(f);
        return out;
    }
};

inline FaceLattice face_lattice(const std::vector<Point>& pts) {
    if (pts.empty() || pts.size() > 64) throw std::invalid_argument("oracle handles 1..64 points");
    const int d = static_cast<int>(pts[0].size());
    if (d < 1 || d > kMaxDim) throw std::invalid_argument("oracle handles dimensions 1..6");
    const std::size_t n = pts.size();
    FaceLattice out;
    out.dim = d;
    std::set<VertexSet> facets;
    std::vector<std::size_t> pick(d);
    // Normal of the hyperplane through the picked points: cofactors of the
    // (d-1) x d difference matrix.
    auto visit = [&]() {
        Row diff[kMaxDim];
        for (int t = 1; t < d; ++t)
            for (int c = 0; c < d; ++c) diff[t - 1][c] = pts[pick[t]][c] - pts[pick[0]][c];
        Row normal{};
        bool zero = true;
        const unsigned all = (1u << d) - 1;
        for (int c = 0; c < d; ++c) {
            normal[c] = (c % 2 ? -1 : 1) * minor_det(diff, d - 1, all & ~(1u << c));
            zero = zero && normal[c] == 0;
        }
        if (zero) return;
        std::int64_t base = 0;
        for (int c = 0; c < d; ++c) base += normal[c] * pts[pick[0]][c];
        bool pos = false, neg = false;
        VertexSet on = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t s = -base;
            for (int c = 0; c < d; ++c) s += normal[c] * pts[i][c];
            if (s > 0) pos = true;
            if (s < 0) neg = true;
            if (pos && neg) return;
            if (s == 0) on |= VertexSet{1} << i;
        }
        facets.insert(on);
    };
    // Lexicographic d-subsets; a subset lying inside an already found facet
    // cannot produce a new one, which prunes most of the search.
    auto inside_known = [&](VertexSet m) {
        for (VertexSet f : facets)
            if ((m & f) == m) return true;
        return false;
    };
    auto rec = [&](auto&& self, int depth, std::size_t start, VertexSet mask) -> void {
        if (depth == d) {
            if (!inside_known(mask)) visit();
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            pick[depth] = i;
            self(self, depth + 1, i + 1, mask | VertexSet{1} << i);
        }
    };
    rec(rec, 0, 0, 0);
    out.facets.assign(facets.begin(), facets.end());

    std::set<VertexSet> faces(facets.begin(), facets.end());
    std::vector<VertexSet> frontier(facets.begin(), facets.end());
    while (!frontier.empty()) {
        std::vector<VertexSet> next;
        for (VertexSet a : frontier)
            for (VertexSet f : out.facets) {
                const VertexSet x = a & f;
                if (x && faces.insert(x).second) next.push_back(x);
            }
        frontier = std::move(next);
    }
    out.faces = std::move(faces);
    return out;
}

}  // namespace oracle
