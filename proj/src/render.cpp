#include "coxtile/render.hpp"

#include "coxtile/prototile_catalog.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace coxtile {

using ojson = nlohmann::ordered_json;

namespace {

std::string hsl_hex(double hue, double sat, double light) {
    const double c = (1 - std::abs(2 * light - 1)) * sat;
    const double hp = hue / 60.0;
    const double x = c * (1 - std::abs(std::fmod(hp, 2.0) - 1));
    double r = 0, g = 0, b = 0;
    if (hp < 1) r = c, g = x;
    else if (hp < 2) r = x, g = c;
    else if (hp < 3) g = c, b = x;
    else if (hp < 4) g = x, b = c;
    else if (hp < 5) r = x, b = c;
    else r = c, b = x;
    const double m = light - c / 2;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround((r + m) * 255)),
                  static_cast<int>(std::lround((g + m) * 255)), static_cast<int>(std::lround((b + m) * 255)));
    return buf;
}

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

double round_decimals(double x, int decimals) {
    const double f = std::pow(10.0, decimals);
    return std::round(x * f) / f;
}

std::string pi_fraction(const Rational& r) { return to_string(r); }

}  // namespace

double round_significant(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;  // no negative zero
}

RenderStyle default_style(const Patch& patch) {
    RenderStyle style;
    std::vector<std::string> ids;
    if (patch.kind == TileKind::rhombic) {
        for (const auto& c : rhombic_prototiles(patch.rank)) ids.push_back(c.id());
    } else {
        for (const auto& c : triangular_prototiles(patch.rank)) ids.push_back(c.id());
    }
    for (std::size_t i = 0; i < ids.size(); ++i)
        style.palette[ids[i]] = hsl_hex(360.0 * static_cast<double>(i) / static_cast<double>(ids.size()), 0.55, 0.62);
    return style;
}

std::string render_svg(const Patch& patch, const RenderStyle& style) {
    if (!(style.scale > 0)) throw std::invalid_argument("render scale must be positive");
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (patch.tiles.empty()) {
        const double side = 2 * style.margin;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << fixed(side) << ' '
            << fixed(side) << "\" width=\"" << fixed(side) << "\" height=\"" << fixed(side) << "\">\n";
        std::string note = patch.diagnostic.empty() ? "empty patch" : patch.diagnostic;
        for (std::size_t p; (p = note.find("--")) != std::string::npos;) note.replace(p, 2, "- ");
        out << "<!-- " << note << " -->\n</svg>\n";
        return out.str();
    }
    for (const auto& t : patch.tiles)
        if (!style.palette.count(t.cls)) throw std::invalid_argument("no palette entry for class " + t.cls);

    // Work from the precision stored in JSON so a round trip renders identically.
    std::vector<std::vector<PlanePoint>> polys;
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& t : patch.tiles) {
        std::vector<PlanePoint> poly;
        for (const auto& v : t.vertices) {
            const PlanePoint r{round_significant(v.x), round_significant(v.y)};
            x0 = std::min(x0, r.x), x1 = std::max(x1, r.x);
            y0 = std::min(y0, r.y), y1 = std::max(y1, r.y);
            poly.push_back(r);
        }
        polys.push_back(std::move(poly));
    }
    const double width = (x1 - x0) * style.scale + 2 * style.margin;
    const double height = (y1 - y0) * style.scale + 2 * style.margin;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << fixed(width) << ' '
        << fixed(height) << "\" width=\"" << fixed(width) << "\" height=\"" << fixed(height) << "\">\n";
    out << "<g stroke=\"#202020\" stroke-width=\"" << fixed(style.stroke_width * style.scale)
        << "\" stroke-linejoin=\"round\">\n";
    for (std::size_t i = 0; i < patch.tiles.size(); ++i) {
        out << "<polygon class=\"" << patch.tiles[i].cls << "\" fill=\"" << style.palette.at(patch.tiles[i].cls)
            << "\" points=\"";
        for (std::size_t k = 0; k < polys[i].size(); ++k) {
            // y grows downwards in SVG.
            const double px = (polys[i][k].x - x0) * style.scale + style.margin;
            const double py = (y1 - polys[i][k].y) * style.scale + style.margin;
            out << (k ? " " : "") << fixed(px) << ',' << fixed(py);
        }
        out << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string patch_to_json(const Patch& patch, int indent) {
    ojson j;
    j["n"] = patch.rank.n();
    j["h"] = patch.rank.h();
    j["lattice"] = lattice_name(patch.lattice);
    j["kind"] = tile_kind_name(patch.kind);
    ojson shift = ojson::array();
    for (double g : patch.shift) shift.push_back(round_significant(g));
    j["shift"] = shift;
    j["level_shift"] = round_significant(patch.level_shift);
    j["radius"] = round_significant(patch.radius);
    ojson tiles = ojson::array();
    for (const auto& t : patch.tiles) {
        ojson verts = ojson::array();
        for (const auto& v : t.vertices) verts.push_back({round_significant(v.x), round_significant(v.y)});
        tiles.push_back({{"class", t.cls}, {"vertices", verts}, {"source", t.source}});
    }
    j["tiles"] = tiles;
    return j.dump(indent);
}

Patch patch_from_json(const std::string& text) {
    try {
        const auto j = ojson::parse(text);
        Patch p;
        p.rank = LatticeRank(j.at("n").get<int>());
        if (j.at("h").get<int>() != p.rank.h()) throw std::invalid_argument("h must equal n + 1");
        const auto lattice = j.at("lattice").get<std::string>();
        if (lattice != "root" && lattice != "weight") throw std::invalid_argument("unknown lattice " + lattice);
        p.lattice = lattice == "root" ? LatticeKind::root : LatticeKind::weight;
        if (j.contains("kind"))
            p.kind = j.at("kind").get<std::string>() == "triangular" ? TileKind::triangular : TileKind::rhombic;
        else
            p.kind = p.lattice == LatticeKind::root ? TileKind::triangular : TileKind::rhombic;
        p.shift = j.at("shift").get<std::vector<double>>();
        p.level_shift = j.value("level_shift", 0.0);
        p.radius = j.at("radius").get<double>();
        for (const auto& t : j.at("tiles")) {
            Tile tile;
            tile.cls = t.at("class").get<std::string>();
            for (const auto& v : t.at("vertices")) {
                if (v.size() != 2) throw std::invalid_argument("a vertex needs two coordinates");
                tile.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
            }
            tile.source = t.at("source").get<std::vector<std::int64_t>>();
            p.tiles.push_back(std::move(tile));
        }
        if (p.tiles.empty()) p.diagnostic = "empty patch";
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed patch JSON: ") + e.what());
    }
}

std::string catalog_json(LatticeRank rank, bool rhombi, bool triangles, int indent) {
    ojson j;
    j["n"] = rank.n();
    j["h"] = rank.h();
    if (rhombi) {
        ojson list = ojson::array();
        for (const auto& c : rhombic_prototiles(rank)) {
            const auto deg = c.angles_deg();
            const auto pi = c.angles_over_pi();
            list.push_back({{"id", c.id()},
                            {"m", c.m},
                            {"angles_deg", {round_decimals(deg[0], 6), round_decimals(deg[1], 6)}},
                            {"angles_pi", {pi_fraction(pi[0]), pi_fraction(pi[1])}},
                            {"square", c.is_square()}});
        }
        j["rhombi"] = list;
    }
    if (triangles) {
        ojson list = ojson::array();
        for (const auto& c : triangular_prototiles(rank)) {
            const auto deg = c.angles_deg();
            const auto pi = c.angles_over_pi();
            const auto len = c.edge_lengths();
            ojson d = ojson::array(), p = ojson::array(), l = ojson::array();
            for (int i = 0; i < 3; ++i) {
                d.push_back(round_decimals(deg[i], 6));
                p.push_back(pi_fraction(pi[i]));
                l.push_back(round_significant(len[i]));
            }
            list.push_back({{"id", c.id()}, {"parts", c.parts}, {"angles_deg", d}, {"angles_pi", p}, {"edge_lengths", l}});
        }
        j["triangles"] = list;
    }
    return j.dump(indent);
}

}  // namespace coxtile
