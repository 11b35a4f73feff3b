#include "coxtile/cells.hpp"
#include "oracles/hull_faces.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <set>

using namespace coxtile;

namespace {

LatticeVector k_vec(LatticeRank rank, int i) {
    std::vector<std::int64_t> c(rank.h(), 0);
    c[i - 1] = 1;
    return LatticeVector::from_k(rank, c);
}

LatticeVector ks(LatticeRank rank, std::initializer_list<int> plus, std::initializer_list<int> minus = {}) {
    LatticeVector v = LatticeVector::zero(rank);
    for (int i : plus) v = v + k_vec(rank, i);
    for (int i : minus) v = v - k_vec(rank, i);
    return v;
}

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// h * (l-coordinates) with the last one dropped: an affine chart of the
// hyperplane sum = 0 with integer coordinates.
oracle::Point chart(const LatticeVector& v) {
    const auto l = v.to(Basis::l).coords();
    const std::int64_t h = v.rank().h();
    oracle::Point p;
    for (std::size_t i = 0; i + 1 < l.size(); ++i) {
        const Rational x = l[i] * Rational(h);
        REQUIRE(x.denominator() == 1);
        p.push_back(x.numerator());
    }
    return p;
}

std::set<std::set<LatticeVector>> hull_two_faces(LatticeRank rank) {
    const auto cell = voronoi_vertices(rank);
    std::vector<oracle::Point> pts;
    for (const auto& v : cell.vertices) pts.push_back(chart(v));
    const auto lattice = oracle::face_lattice(pts);
    std::set<std::set<LatticeVector>> out;
    for (auto mask : lattice.faces_of_dim(pts, 2)) {
        std::set<LatticeVector> f;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (mask >> i & 1) f.insert(cell.vertices[i]);
        out.insert(f);
    }
    return out;
}

std::set<std::set<LatticeVector>> enumerated_two_faces(LatticeRank rank) {
    std::set<std::set<LatticeVector>> out;
    for (const auto& f : voronoi_two_faces(rank)) out.insert({f.vertices.begin(), f.vertices.end()});
    return out;
}

}  // namespace

TEST_CASE("voronoi vertex counts") {
    for (int n = 1; n <= 11; ++n) {
        const LatticeRank rank(n);
        const auto cell = voronoi_vertices(rank);
        CHECK(cell.vertices.size() == (std::size_t{1} << (n + 1)) - 2);
        CHECK(std::set<LatticeVector>(cell.vertices.begin(), cell.vertices.end()).size() == cell.vertices.size());
        std::map<int, long long> orbit_sizes;
        for (auto m : cell.subsets) ++orbit_sizes[std::popcount(m)];
        for (int i = 1; i <= n; ++i) CHECK(orbit_sizes[i] == binomial(n + 1, i));
        for (std::size_t t = 0; t < cell.vertices.size(); ++t) {
            CHECK(cell.vertices[t] == subset_sum(rank, cell.subsets[t]));
            const auto info = classify_voronoi_vertex(cell.vertices[t]);
            CHECK(info.subset == cell.subsets[t]);
            CHECK(info.orbit == std::popcount(cell.subsets[t]));
        }
    }
    CHECK(voronoi_vertices(LatticeRank(1)).vertices.size() == 2);
    CHECK_THROWS_AS(voronoi_vertices(LatticeRank(21)), std::length_error);
}

TEST_CASE("A_3 cell: two tetrahedra and an octahedron") {
    const LatticeRank rank(3);
    const auto cell = voronoi_vertices(rank);
    std::set<LatticeVector> got(cell.vertices.begin(), cell.vertices.end());
    std::set<LatticeVector> expected;
    for (int i = 1; i <= 4; ++i) {
        expected.insert(k_vec(rank, i));
        expected.insert(-k_vec(rank, i));
        for (int j = i + 1; j <= 4; ++j) expected.insert(k_vec(rank, i) + k_vec(rank, j));
    }
    CHECK(expected.size() == 14);
    CHECK(got == expected);
}

TEST_CASE("A_4 cell sizes") {
    const auto cell = voronoi_vertices(LatticeRank(4));
    CHECK(cell.vertices.size() == 30);
}

TEST_CASE("vertex classification rejects other points") {
    const LatticeRank rank(4);
    CHECK_THROWS_AS(classify_voronoi_vertex(LatticeVector::zero(rank)), std::invalid_argument);
    CHECK_THROWS_AS(classify_voronoi_vertex(ks(rank, {1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(classify_voronoi_vertex(ks(rank, {1}, {2})), std::invalid_argument);
    CHECK(classify_voronoi_vertex(-k_vec(rank, 5)).orbit == 4);
}

TEST_CASE("rhombic two-faces") {
    CHECK_THROWS_AS(voronoi_two_faces(LatticeRank(2)), std::invalid_argument);

    SUBCASE("A_3 example face") {
        const LatticeRank rank(3);
        const auto faces = voronoi_two_faces(rank);
        CHECK(faces.size() == 12);
        const std::set<LatticeVector> want{k_vec(rank, 1), ks(rank, {1, 2}), ks(rank, {1, 3}), -k_vec(rank, 4)};
        bool found = false;
        for (const auto& f : faces)
            if (std::set<LatticeVector>(f.vertices.begin(), f.vertices.end()) == want) {
                found = true;
                CHECK(f.base == 1u);
                CHECK(f.a == 2);
                CHECK(f.b == 3);
            }
        CHECK(found);
    }

    SUBCASE("rhombic and planar in exact arithmetic") {
        for (int n = 3; n <= 7; ++n) {
            const LatticeRank rank(n);
            for (const auto& f : voronoi_two_faces(rank)) {
                const auto& v = f.vertices;
                const auto e1 = v[1] - v[0];
                const auto e2 = v[3] - v[0];
                CHECK(e1 == k_vec(rank, f.a));
                CHECK(e2 == k_vec(rank, f.b));
                CHECK(inner_product(e1, e1) == inner_product(e2, e2));
                // A parallelogram: the fourth corner is determined by the other three.
                CHECK(v[2] == v[1] + v[3] - v[0]);
                for (const auto& x : v) CHECK_NOTHROW(classify_voronoi_vertex(x));
                const int s = std::popcount(f.base);
                CHECK(s >= 1);
                CHECK(s <= n - 2);
            }
        }
    }
}

TEST_CASE("two-faces match the hull oracle") {
    for (int n : {3, 4, 5}) {
        CAPTURE(n);
        const LatticeRank rank(n);
        const auto oracle_faces = hull_two_faces(rank);
        if (n == 3) CHECK(oracle_faces.size() == 12);
        for (const auto& f : oracle_faces) CHECK(f.size() == 4);
        CHECK(enumerated_two_faces(rank) == oracle_faces);
    }
}

TEST_CASE("oracle sanity on a cube") {
    std::vector<oracle::Point> cube;
    for (int m = 0; m < 8; ++m) cube.push_back({m & 1, m >> 1 & 1, m >> 2 & 1});
    const auto lat = oracle::face_lattice(cube);
    CHECK(lat.facets.size() == 6);
    CHECK(lat.faces_of_dim(cube, 1).size() == 12);
    CHECK(lat.faces_of_dim(cube, 0).size() == 8);
}

TEST_CASE("facet centres lie on the cell boundary") {
    for (int n : {3, 4}) {
        const LatticeRank rank(n);
        const auto cell = voronoi_vertices(rank);
        std::vector<oracle::Point> pts;
        for (const auto& v : cell.vertices) {
            auto p = chart(v);
            for (auto& x : p) x *= 2;  // room for the half-integers below
            pts.push_back(p);
        }
        const auto lat = oracle::face_lattice(pts);
        for (int i = 1; i <= rank.h(); ++i)
            for (int j = 1; j <= rank.h(); ++j) {
                if (i == j) continue;
                const auto mid = (k_vec(rank, i) - k_vec(rank, j)) * Rational(1, 2);
                const auto c = chart(mid * Rational(2));
                // On the boundary: inside the hull, and on some facet's affine hull.
                bool on_some_facet = false;
                for (auto f : lat.facets) {
                    std::vector<oracle::Point> with = pts;
                    with.push_back(c);
                    const oracle::VertexSet extended = f | oracle::VertexSet{1} << pts.size();
                    if (oracle::affine_dim(with, extended) == n - 1) on_some_facet = true;
                }
                CHECK(on_some_facet);
                // Inside: adding the point leaves the facets of the hull unchanged.
                std::vector<oracle::Point> with = pts;
                with.push_back(c);
                std::set<oracle::VertexSet> old_facets(lat.facets.begin(), lat.facets.end()), new_facets;
                const oracle::VertexSet old_bits = (oracle::VertexSet{1} << pts.size()) - 1;
                for (auto f : oracle::face_lattice(with).facets) new_facets.insert(f & old_bits);
                CHECK(new_facets == old_facets);
            }
    }
}

TEST_CASE("delone orbits") {
    const LatticeRank a3(3);
    const auto oct = delone_orbit(a3, 2);
    CHECK(oct.size() == 6);
    for (const auto& v : oct) CHECK(inner_product(v, v) == Rational(1));
    const LatticeRank a4(4);
    const auto simplex = delone_orbit(a4, 1);
    const auto k = k_vectors(a4);
    CHECK(std::set<LatticeVector>(simplex.begin(), simplex.end()) == std::set<LatticeVector>(k.begin(), k.end()));
    for (int n = 1; n <= 9; ++n) {
        const LatticeRank rank(n);
        for (int i = 1; i <= n; ++i) {
            const auto a = delone_orbit(rank, i);
            CHECK(a.size() == static_cast<std::size_t>(binomial(n + 1, i)));
            std::set<LatticeVector> neg;
            for (const auto& v : delone_orbit(rank, n + 1 - i)) neg.insert(-v);
            CHECK(std::set<LatticeVector>(a.begin(), a.end()) == neg);
        }
        CHECK_THROWS_AS(delone_orbit(rank, 0), std::out_of_range);
        CHECK_THROWS_AS(delone_orbit(rank, n + 1), std::out_of_range);
    }
}

TEST_CASE("delone cell around a vertex") {
    const LatticeRank rank(4);
    SUBCASE("around k_1") {
        const auto cell = delone_cell_at_vertex(k_vec(rank, 1));
        const std::set<LatticeVector> want{LatticeVector::zero(rank), ks(rank, {1}, {2}), ks(rank, {1}, {3}),
                                           ks(rank, {1}, {4}), ks(rank, {1}, {5})};
        CHECK(std::set<LatticeVector>(cell.begin(), cell.end()) == want);
    }
    SUBCASE("around k_1 + k_2, ten points") {
        const auto cell = delone_cell_at_vertex(ks(rank, {1, 2}));
        const std::set<LatticeVector> want{LatticeVector::zero(rank),
                                           ks(rank, {1}, {3}),
                                           ks(rank, {1, 2}, {3, 4}),
                                           ks(rank, {1, 2}, {4, 5}),
                                           ks(rank, {2}, {5}),
                                           ks(rank, {2}, {3}),
                                           ks(rank, {1}, {4}),
                                           ks(rank, {1, 2}, {3, 5}),
                                           ks(rank, {2}, {4}),
                                           ks(rank, {1}, {5})};
        CHECK(want.size() == 10);
        CHECK(std::set<LatticeVector>(cell.begin(), cell.end()) == want);
    }
    SUBCASE("every cell contains the origin and only root-lattice points") {
        for (int n = 2; n <= 6; ++n)
            for (const auto& v : voronoi_vertices(LatticeRank(n)).vertices) {
                const auto cell = delone_cell_at_vertex(v);
                CHECK(std::find(cell.begin(), cell.end(), LatticeVector::zero(LatticeRank(n))) != cell.end());
                for (const auto& p : cell) CHECK(p.in_root_lattice());
            }
    }
    CHECK_THROWS_AS(delone_cell_at_vertex(ks(rank, {1, 1})), std::invalid_argument);
}

TEST_CASE("delone triangles") {
    SUBCASE("A_2 at the origin") {
        const LatticeRank rank(2);
        const auto f = make_delone_face(LatticeVector::zero(rank), 1, 2, 3, TriangleOrientation::up);
        const auto e = f.edges();
        CHECK(e[0] == ks(rank, {1}, {2}));
        CHECK(e[1] == ks(rank, {2}, {3}));
        CHECK(e[2] == ks(rank, {3}, {1}));
    }
    for (int n = 2; n <= 7; ++n) {
        const LatticeRank rank(n);
        const auto anchor = ks(rank, {1, 2}, {3, 3});
        REQUIRE(anchor.in_root_lattice());
        const auto faces = delone_two_faces_at(anchor);
        CHECK(faces.size() == static_cast<std::size_t>(6 * binomial(n + 1, 3)));
        std::set<std::set<LatticeVector>> distinct;
        for (const auto& f : faces) {
            const auto e = f.edges();
            CHECK(e[0] + e[1] + e[2] == LatticeVector::zero(rank));
            for (const auto& x : e) {
                CHECK(inner_product(x, x) == Rational(2));
                CHECK(x.in_root_lattice());
            }
            CHECK(f.vertices[0] == anchor);
            distinct.insert({f.vertices.begin(), f.vertices.end()});
        }
        CHECK(distinct.size() == faces.size());
    }
    const LatticeRank rank(3);
    CHECK_THROWS_AS(delone_two_faces_at(k_vec(rank, 1)), std::invalid_argument);
    CHECK_THROWS_AS(make_delone_face(LatticeVector::zero(rank), 1, 1, 2, TriangleOrientation::up),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_delone_face(LatticeVector::zero(rank), 1, 2, 5, TriangleOrientation::up),
                    std::out_of_range);
}
