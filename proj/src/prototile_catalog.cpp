#include "coxtile/prototile_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coxtile {

namespace {
double pi_multiple_to_deg(const Rational& r) { return 180.0 * to_double(r); }
}  // namespace

std::array<Rational, 2> RhombusClass::angles_over_pi() const {
    const Rational a(2 * m, h);
    return {a, Rational(1) - a};
}

std::array<double, 2> RhombusClass::angles_deg() const {
    const auto a = angles_over_pi();
    return {pi_multiple_to_deg(a[0]), pi_multiple_to_deg(a[1])};
}

std::string RhombusClass::id() const { return "rhombus-m" + std::to_string(m); }

std::array<Rational, 3> TriangleClass::angles_over_pi() const {
    return {Rational(parts[0], h), Rational(parts[1], h), Rational(parts[2], h)};
}

std::array<double, 3> TriangleClass::angles_deg() const {
    const auto a = angles_over_pi();
    return {pi_multiple_to_deg(a[0]), pi_multiple_to_deg(a[1]), pi_multiple_to_deg(a[2])};
}

std::array<double, 3> TriangleClass::edge_lengths() const {
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) out[i] = 2.0 * std::sin(parts[i] * std::numbers::pi / h);
    return out;
}

std::string TriangleClass::id() const {
    return "triangle-" + std::to_string(parts[0]) + "-" + std::to_string(parts[1]) + "-" + std::to_string(parts[2]);
}

std::optional<int> canonical_rhombus_parameter(int h, int d) {
    d = ((d % h) + h) % h;
    d = std::min(d, h - d);
    if (d == 0 || 2 * d == h) return std::nullopt;
    if (h % 2 == 0) d = std::min(d, h / 2 - d);
    return d;
}

std::vector<RhombusClass> rhombic_prototiles(LatticeRank rank) {
    if (rank.n() < 3) throw std::invalid_argument("rhombic prototiles need n >= 3");
    const int h = rank.h();
    std::vector<RhombusClass> out;
    for (int d = 1; d < h; ++d) {
        const auto m = canonical_rhombus_parameter(h, d);
        if (!m) continue;
        RhombusClass c{h, *m};
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<RhombusClass> classify_rhombus(int i, int j, LatticeRank rank) {
    const int h = rank.h();
    if (i < 1 || i > h || j < 1 || j > h) throw std::out_of_range("rhombus index outside 1..n+1");
    if (i == j) throw std::invalid_argument("rhombus needs two distinct edge directions");
    const auto m = canonical_rhombus_parameter(h, j - i);
    if (!m) return std::nullopt;
    return RhombusClass{h, *m};
}

std::vector<TriangleClass> triangular_prototiles(LatticeRank rank) {
    if (rank.n() < 2) throw std::invalid_argument("triangular prototiles need n >= 2");
    const int h = rank.h();
    std::vector<TriangleClass> out;
    for (int a = 1; 3 * a <= h; ++a)
        for (int b = a; a + 2 * b <= h; ++b) out.push_back(TriangleClass{h, {a, b, h - a - b}});
    return out;
}

TriangleClass classify_triangle(int i, int j, int l, LatticeRank rank) {
    const int h = rank.h();
    for (int x : {i, j, l})
        if (x < 1 || x > h) throw std::out_of_range("triangle index outside 1..n+1");
    if (i == j || j == l || i == l) throw std::invalid_argument("triangle indices must be distinct");
    std::array<int, 3> s{i, j, l};
    std::sort(s.begin(), s.end(), std::greater<>());
    std::array<int, 3> parts{s[0] - s[1], s[1] - s[2], h - (s[0] - s[2])};
    std::sort(parts.begin(), parts.end());
    return TriangleClass{h, parts};
}

int three_part_partition_count(int h) {
    int count = 0;
    for (int a = 1; a <= h; ++a)
        for (int b = a; b <= h; ++b) {
            const int c = h - a - b;
            if (c >= b) ++count;
        }
    return count;
}

double Polygon::signed_area() const {
    double a = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        a += vertices[i].cross(vertices[(i + 1) % vertices.size()]);
    return 0.5 * a;
}

std::vector<double> Polygon::interior_angles_deg() const {
    const std::size_t n = vertices.size();
    std::vector<double> out;
    for (std::size_t i = 0; i < n; ++i) {
        const PlanePoint e1 = vertices[i] - vertices[(i + n - 1) % n];
        const PlanePoint e2 = vertices[(i + 1) % n] - vertices[i];
        const double turn = std::atan2(e1.cross(e2), e1.dot(e2));
        out.push_back((std::numbers::pi - turn) * 180.0 / std::numbers::pi);
    }
    return out;
}

std::vector<double> Polygon::edge_lengths() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out.push_back((vertices[(i + 1) % vertices.size()] - vertices[i]).norm());
    return out;
}

DartAndKite dart_and_kite(LatticeRank rank) {
    if (rank.h() != 5) throw std::invalid_argument("darts and kites exist only for h = 5 (A_4)");
    const double deg = std::numbers::pi / 180.0;

    // Kite: (1,2,2) triangle with apex P (36 deg) and base B, C (72 deg), glued
    // to its mirror image along the long side PB.
    const double long_side = 2.0 * std::sin(2.0 * std::numbers::pi / 5.0);
    const PlanePoint p{0, 0}, b{long_side, 0};
    const PlanePoint c{long_side * std::cos(36 * deg), long_side * std::sin(36 * deg)};
    const PlanePoint c_mirror{c.x, -c.y};
    Polygon kite{{c, p, c_mirror, b}};

    // Dart: (1,1,3) triangle with apex Q (108 deg) and U, V (36 deg), glued to
    // its mirror image along the short side QU.
    const double short_side = 2.0 * std::sin(std::numbers::pi / 5.0);
    const PlanePoint q{0, 0}, u{short_side, 0};
    const PlanePoint v{short_side * std::cos(108 * deg), short_side * std::sin(108 * deg)};
    const PlanePoint v_mirror{v.x, -v.y};
    Polygon dart{{v_mirror, u, v, q}};

    for (Polygon* poly : {&kite, &dart}) {
        const auto lengths = poly->edge_lengths();
        const double longest = *std::max_element(lengths.begin(), lengths.end());
        for (auto& x : poly->vertices) x = x * (1.0 / longest);
    }
    return {kite, dart};
}

}  // namespace coxtile
