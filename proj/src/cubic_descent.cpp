#include "coxtile/cubic_descent.hpp"

#include "coxtile/cells.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace coxtile {

CubeVertex CubeVertex::parse(const std::string& text) {
    CubeVertex v;
    for (char c : text) {
        if (c == '+')
            v.signs.push_back(1);
        else if (c == '-')
            v.signs.push_back(-1);
        else
            throw std::invalid_argument(std::string("sign string may contain only '+' and '-', got '") + c + "'");
    }
    if (v.signs.empty()) throw std::invalid_argument("empty sign string");
    return v;
}

int CubeVertex::minus_count() const { return static_cast<int>(std::count(signs.begin(), signs.end(), -1)); }

std::string CubeVertex::to_string() const {
    std::string s;
    for (int x : signs) s += x > 0 ? '+' : '-';
    return s;
}

std::string LiftedVector::to_string() const { return k_part.to_string() + " + (" + coxtile::to_string(l0) + ") l_0"; }

LiftedVector lift_cube_vertex(const CubeVertex& v, LatticeRank rank) {
    const int h = rank.h();
    if (static_cast<int>(v.signs.size()) != h)
        throw std::invalid_argument("cube vertex needs " + std::to_string(h) + " signs, got " +
                                    std::to_string(v.signs.size()));
    std::vector<std::int64_t> k(h, 0);
    int total = 0;
    for (int i = 0; i < h; ++i) {
        if (v.signs[i] != 1 && v.signs[i] != -1) throw std::invalid_argument("cube signs must be +1 or -1");
        if (v.signs[i] < 0) k[i] = -1;
        total += v.signs[i];
    }
    return {LatticeVector::from_k(rank, k), Rational(total, 2 * h)};
}

LatticeVector project_cube_vertex(const CubeVertex& v, LatticeRank rank) { return lift_cube_vertex(v, rank).k_part; }

std::vector<CubeVertex> cube_vertices(LatticeRank rank) {
    const int h = rank.h();
    if (h > 24) throw std::length_error("cube vertex enumeration is limited to h <= 24");
    std::vector<CubeVertex> out;
    for (std::uint32_t mask = 0; mask < (1u << h); ++mask) {
        CubeVertex v;
        for (int i = 0; i < h; ++i) v.signs.push_back((mask >> i) & 1u ? -1 : 1);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<long long> cube_orbit_decomposition(LatticeRank rank) {
    const int h = rank.h();
    std::vector<long long> by_minus(h + 1, 0);
    for (const auto& v : cube_vertices(rank)) ++by_minus[v.minus_count()];
    std::vector<long long> out{by_minus[0], by_minus[h]};
    for (int j = 1; j < h; ++j) out.push_back(by_minus[j]);
    return out;
}

CheckResult image_law_check(LatticeRank rank) {
    CheckResult r{"image_law_n" + std::to_string(rank.n()), true, ""};
    auto cell = voronoi_vertices(rank).vertices;
    cell.push_back(LatticeVector::zero(rank));
    std::sort(cell.begin(), cell.end());

    std::vector<std::pair<LatticeVector, int>> preimages;
    for (const auto& v : cube_vertices(rank)) {
        const auto img = project_cube_vertex(v, rank);
        const auto it = std::find_if(preimages.begin(), preimages.end(), [&](const auto& p) { return p.first == img; });
        if (it == preimages.end())
            preimages.emplace_back(img, 1);
        else
            ++it->second;
        if (!std::binary_search(cell.begin(), cell.end(), img)) {
            r.pass = false;
            r.details += "image of " + v.to_string() + " is not a vertex of V(0) or 0; ";
        }
    }
    if (preimages.size() != cell.size()) {
        r.pass = false;
        r.details += "image has " + std::to_string(preimages.size()) + " points, expected " + std::to_string(cell.size()) + "; ";
    }
    for (const auto& [img, count] : preimages) {
        const int expected = img == LatticeVector::zero(rank) ? 2 : 1;
        if (count != expected) {
            r.pass = false;
            r.details += img.to_string() + " has " + std::to_string(count) + " preimages; ";
        }
    }
    std::ostringstream hist;
    for (auto c : cube_orbit_decomposition(rank)) hist << c << ' ';
    r.details += "histogram " + hist.str();
    return r;
}

CheckResult k_lift_check(LatticeRank rank) {
    const int h = rank.h();
    CheckResult r{"k_lift_n" + std::to_string(rank.n()), true, ""};
    const Rational coefficient(h - 2, 2 * h);
    const auto ks = k_vectors(rank);
    LatticeVector sum_k = LatticeVector::zero(rank);
    Rational sum_l0 = 0;
    for (int i = 0; i < h; ++i) {
        CubeVertex v;
        for (int j = 0; j < h; ++j) v.signs.push_back(j == i ? 1 : -1);
        const LiftedVector rhs = lift_cube_vertex(v, rank);
        const LiftedVector lhs{ks[i], -coefficient};
        if (!(lhs == rhs)) {
            r.pass = false;
            r.details += "k_" + std::to_string(i + 1) + ": " + lhs.to_string() + " != " + rhs.to_string() + "; ";
        }
        sum_k = sum_k + rhs.k_part;
        sum_l0 += rhs.l0;
    }
    // Summing the identities: sum k_i - h (h-2)/(2h) l_0 = -(h-2)/2 l_0.
    if (!(sum_k == LatticeVector::zero(rank)) || sum_l0 != Rational(-(h - 2), 2)) {
        r.pass = false;
        r.details += "sum of the identities does not reduce to sum k_i = 0; ";
    }
    if (r.pass) r.details = "k_i - (" + to_string(coefficient) + ") l_0 = 1/2(l_i - others) for i = 1.." + std::to_string(h);
    return r;
}

RhombohedronReport rhombohedron_descent(LatticeRank rank) {
    if (rank.n() != 4) throw std::invalid_argument("the rhombohedron descent is stated for n = 4");
    RhombohedronReport rep{{}, {}, {}, LatticeVector::zero(rank), 0.0, false, false, ""};
    auto k = [&](std::vector<std::int64_t> c) { return LatticeVector::from_k(rank, c); };
    const auto k1 = k({1, 0, 0, 0, 0}), k2 = k({0, 1, 0, 0, 0}), k3 = k({0, 0, 1, 0, 0}), k4 = k({0, 0, 0, 1, 0}),
               k5 = k({0, 0, 0, 0, 1});
    rep.expected = {k1, -k5, k1 + k2, k1 + k3, k1 + k4, -(k4 + k5), -(k3 + k5), -(k2 + k5)};

    LatticeVector sum = LatticeVector::zero(rank);
    for (int mask = 0; mask < 8; ++mask) {
        CubeVertex v{{1, (mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1, -1}};
        const auto img = project_cube_vertex(v, rank);
        rep.vertices.push_back(v);
        rep.images.push_back(img);
        sum = sum + img;
    }
    auto sorted_images = rep.images;
    auto sorted_expected = rep.expected;
    std::sort(sorted_images.begin(), sorted_images.end());
    std::sort(sorted_expected.begin(), sorted_expected.end());
    rep.images_match = sorted_images == sorted_expected;
    if (!rep.images_match) {
        for (const auto& img : sorted_images)
            if (!std::binary_search(sorted_expected.begin(), sorted_expected.end(), img))
                rep.diff += "unexpected image " + img.to_string() + "; ";
        for (const auto& e : sorted_expected)
            if (!std::binary_search(sorted_images.begin(), sorted_images.end(), e))
                rep.diff += "missing target " + e.to_string() + "; ";
    }
    rep.center = sum * Rational(1, 8);
    rep.center_match = rep.center == (k1 - k5) * Rational(1, 2);
    if (!rep.center_match) rep.diff += "centre is " + rep.center.to_string() + "; ";

    // Edges of the rhombohedron run along k_2, k_3, k_4.
    const double c = to_double(inner_product(k2, k3)) / to_double(inner_product(k2, k2));
    rep.face_angle_deg = std::acos(c) * 180.0 / std::numbers::pi;
    return rep;
}

CheckResult hexagon_check() {
    const LatticeRank rank(2);
    CheckResult r{"hexagon_a2", true, ""};
    std::vector<LatticeVector> images;
    for (const auto& v : cube_vertices(rank)) {
        if (v.minus_count() == 0 || v.minus_count() == 3) continue;
        images.push_back(project_cube_vertex(v, rank));
    }
    std::vector<LatticeVector> expected;
    for (const auto& kv : k_vectors(rank)) {
        expected.push_back(kv);
        expected.push_back(-kv);
    }
    std::sort(images.begin(), images.end());
    std::sort(expected.begin(), expected.end());
    r.pass = images == expected;
    r.details = r.pass ? "six images are +-k_1, +-k_2, +-k_3" : "images differ from the hexagon +-k_i";
    return r;
}

CheckResult edge_image_check(LatticeRank rank) {
    CheckResult r{"edge_images_n" + std::to_string(rank.n()), true, ""};
    const auto ks = k_vectors(rank);
    std::size_t edges = 0;
    for (const auto& v : cube_vertices(rank))
        for (int i = 0; i < rank.h(); ++i) {
            if (v.signs[i] != -1) continue;  // each edge once, from its minus end
            CubeVertex w = v;
            w.signs[i] = 1;
            const auto d = project_cube_vertex(w, rank) - project_cube_vertex(v, rank);
            ++edges;
            if (!(d == ks[i])) {
                r.pass = false;
                r.details += "edge " + v.to_string() + " -> " + w.to_string() + " maps to " + d.to_string() + "; ";
            }
        }
    if (r.pass) r.details = std::to_string(edges) + " edges map to their k_i";
    return r;
}

}  // namespace coxtile
