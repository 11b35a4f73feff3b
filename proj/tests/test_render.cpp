#include "coxtile/render.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <regex>
#include <set>

using namespace coxtile;
using nlohmann::json;

namespace {

struct SvgPolygon {
    std::string cls, fill;
    std::vector<PlanePoint> points;
};

std::vector<SvgPolygon> polygons(const std::string& svg) {
    static const std::regex poly(R"re(<polygon class="([^"]*)" fill="([^"]*)" points="([^"]*)"/>)re");
    static const std::regex pt(R"(([-0-9.]+),([-0-9.]+))");
    std::vector<SvgPolygon> out;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly); it != std::sregex_iterator(); ++it) {
        SvgPolygon p{(*it)[1], (*it)[2], {}};
        const std::string pts = (*it)[3];
        for (auto jt = std::sregex_iterator(pts.begin(), pts.end(), pt); jt != std::sregex_iterator(); ++jt)
            p.points.push_back({std::stod((*jt)[1]), std::stod((*jt)[2])});
        out.push_back(std::move(p));
    }
    return out;
}

Patch unit_square() {
    Patch p;
    p.rank = LatticeRank(3);
    p.kind = TileKind::rhombic;
    p.lattice = LatticeKind::weight;
    p.radius = 1.0;
    p.shift = {0.0};
    p.tiles.push_back(Tile{"rhombus-m1", {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {0, 0, 0, 0, 1, 2}});
    return p;
}

Patch make(int n, TileKind kind, double radius) {
    PatchOptions o;
    o.radius = radius;
    return generate_patch(LatticeRank(n), kind,
                          kind == TileKind::rhombic ? LatticeKind::weight : LatticeKind::root, o);
}

}  // namespace

TEST_CASE("unit square at scale 100") {
    const Patch p = unit_square();
    RenderStyle style = default_style(p);
    style.scale = 100;
    style.margin = 5;
    const std::string svg = render_svg(p, style);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("viewBox=\"0 0 110.0000 110.0000\"") != std::string::npos);
    const auto polys = polygons(svg);
    REQUIRE(polys.size() == 1);
    double x0 = 1e9, x1 = -1e9, y0 = 1e9, y1 = -1e9;
    for (const auto& q : polys[0].points) {
        x0 = std::min(x0, q.x), x1 = std::max(x1, q.x);
        y0 = std::min(y0, q.y), y1 = std::max(y1, q.y);
    }
    CHECK(x1 - x0 == doctest::Approx(100.0));
    CHECK(y1 - y0 == doctest::Approx(100.0));
    CHECK(x0 == doctest::Approx(5.0));
    // The first vertex (0,0) is at the bottom-left: SVG y points down.
    CHECK(polys[0].points[0].x == doctest::Approx(5.0));
    CHECK(polys[0].points[0].y == doctest::Approx(105.0));
    CHECK(polys[0].fill == style.palette.at("rhombus-m1"));
}

TEST_CASE("one polygon per tile, filled by class") {
    const Patch p5 = make(5, TileKind::rhombic, 5.0);
    const auto svg5 = render_svg(p5, default_style(p5));
    const auto polys5 = polygons(svg5);
    CHECK(polys5.size() == p5.tiles.size());
    std::set<std::string> fills;
    for (const auto& q : polys5) fills.insert(q.fill);
    CHECK(fills.size() == 1);

    const Patch p4 = make(4, TileKind::rhombic, 5.0);
    const auto style = default_style(p4);
    CHECK(style.palette.size() == 2);
    CHECK(style.palette.at("rhombus-m1") != style.palette.at("rhombus-m2"));
    const auto polys4 = polygons(render_svg(p4, style));
    REQUIRE(polys4.size() == p4.tiles.size());
    for (std::size_t i = 0; i < polys4.size(); ++i) {
        CHECK(polys4[i].cls == p4.tiles[i].cls);
        CHECK(polys4[i].fill == style.palette.at(p4.tiles[i].cls));
        CHECK(polys4[i].points.size() == 4);
    }
    for (const auto& [cls, color] : default_style(make(6, TileKind::triangular, 3.0)).palette)
        CHECK(std::regex_match(color, std::regex("#[0-9a-f]{6}")));
}

TEST_CASE("rendering is deterministic and survives a JSON round trip") {
    for (auto [n, kind] : {std::pair{4, TileKind::rhombic}, {7, TileKind::rhombic}, {4, TileKind::triangular}}) {
        const Patch p = make(n, kind, 5.0);
        const auto style = default_style(p);
        const std::string a = render_svg(p, style);
        CHECK(a == render_svg(p, style));
        CHECK(a == render_svg(make(n, kind, 5.0), style));
        const std::string text = patch_to_json(p);
        const Patch back = patch_from_json(text);
        CHECK(render_svg(back, style) == a);
        CHECK(patch_to_json(back) == text);
        CHECK(back.tiles.size() == p.tiles.size());
        CHECK(back.kind == p.kind);
        CHECK(back.lattice == p.lattice);
    }
}

TEST_CASE("patch JSON schema") {
    const Patch p = make(4, TileKind::rhombic, 3.0);
    const auto j = json::parse(patch_to_json(p, 2));
    CHECK(j.at("n") == 4);
    CHECK(j.at("h") == 5);
    CHECK(j.at("lattice") == "weight");
    CHECK(j.at("kind") == "rhombic");
    CHECK(j.at("radius") == 3.0);
    CHECK(j.at("shift").size() == 2);
    REQUIRE(j.at("tiles").size() == p.tiles.size());
    for (const auto& t : j.at("tiles")) {
        CHECK(t.at("class").is_string());
        CHECK(t.at("vertices").size() == 4);
        for (const auto& v : t.at("vertices")) CHECK(v.size() == 2);
        CHECK(t.at("source").size() == 7);
    }
    CHECK_THROWS_AS(patch_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(patch_from_json(R"({"n": 4})"), std::invalid_argument);
    CHECK_THROWS_AS(patch_from_json(R"({"n":4,"h":6,"lattice":"weight","shift":[],"radius":1,"tiles":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(patch_from_json(R"({"n":4,"h":5,"lattice":"hex","shift":[],"radius":1,"tiles":[]})"),
                    std::invalid_argument);
}

TEST_CASE("degenerate inputs") {
    Patch empty = unit_square();
    empty.tiles.clear();
    empty.diagnostic = "nothing -- here";
    const auto svg = render_svg(empty, RenderStyle{});
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    const auto open = svg.find("<!--"), close = svg.find("-->");
    REQUIRE(open != std::string::npos);
    REQUIRE(close != std::string::npos);
    const std::string body = svg.substr(open + 4, close - open - 4);
    CHECK(body.find("nothing") != std::string::npos);
    CHECK(body.find("--") == std::string::npos);
    CHECK(polygons(svg).empty());

    RenderStyle bare;
    CHECK_THROWS_AS(render_svg(unit_square(), bare), std::invalid_argument);
    RenderStyle flat = default_style(unit_square());
    flat.scale = 0;
    CHECK_THROWS_AS(render_svg(unit_square(), flat), std::invalid_argument);

    CHECK(round_significant(0.1234567890123456) == 0.123456789012);
    CHECK(round_significant(-1e-20) == -1e-20);
    CHECK(round_significant(2.0 / 3.0, 3) == 0.667);
}

TEST_CASE("catalog JSON") {
    const auto j = json::parse(catalog_json(LatticeRank(6), true, true));
    CHECK(j.at("h") == 7);
    REQUIRE(j.at("triangles").size() == 4);
    CHECK(j["triangles"][0]["parts"] == json::array({1, 1, 5}));
    CHECK(j["triangles"][0]["angles_pi"] == json::array({"1/7", "1/7", "5/7"}));
    CHECK(j.at("rhombi").size() == 3);
    CHECK(j["rhombi"][0]["angles_pi"] == json::array({"2/7", "5/7"}));
    const auto r = json::parse(catalog_json(LatticeRank(3), true, false));
    CHECK(!r.contains("triangles"));
    CHECK(r["rhombi"][0]["square"] == true);
    CHECK(r["rhombi"][0]["angles_deg"] == json::array({90.0, 90.0}));
}
