#include "coxtile/cli.hpp"

#include "coxtile/cubic_descent.hpp"
#include "coxtile/prototile_catalog.hpp"
#include "coxtile/render.hpp"
#include "coxtile/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace coxtile {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_shift(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw UsageError("bad shift component '" + item + "'");
        out.push_back(v);
    }
    return out;
}

double default_radius(int n) {
    switch (n) {
        case 4: return 8.0;
        case 7: return 6.0;
        case 11: return 5.0;
        default: return 6.0;
    }
}

std::string deg(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

int run_catalog(const std::string& which, int n, bool json, std::ostream& out) {
    const LatticeRank rank(n);
    const bool rhombi = which == "rhombi";
    if (json) {
        out << catalog_json(rank, rhombi, !rhombi) << '\n';
        return kOk;
    }
    if (rhombi) {
        const auto classes = rhombic_prototiles(rank);
        out << "A_" << n << " (h = " << rank.h() << "): " << classes.size() << " rhombic prototiles\n";
        for (const auto& c : classes) {
            const auto d = c.angles_deg();
            const auto p = c.angles_over_pi();
            out << "  m=" << c.m << "  angles " << deg(d[0]) << " / " << deg(d[1]) << " deg  (" << to_string(p[0])
                << ", " << to_string(p[1]) << ") pi" << (c.is_square() ? "  square" : "") << '\n';
        }
    } else {
        const auto classes = triangular_prototiles(rank);
        out << "A_" << n << " (h = " << rank.h() << "): " << classes.size() << " triangular prototiles\n";
        for (const auto& c : classes) {
            const auto d = c.angles_deg();
            const auto l = c.edge_lengths();
            out << "  (" << c.parts[0] << ", " << c.parts[1] << ", " << c.parts[2] << ")  angles " << deg(d[0]) << ' '
                << deg(d[1]) << ' ' << deg(d[2]) << " deg  edges " << deg(l[0]) << ' ' << deg(l[1]) << ' ' << deg(l[2])
                << '\n';
        }
    }
    return kOk;
}

struct PatchArgs {
    int n = 0;
    std::string lattice;
    std::string kind;
    double radius = 0.0;
    std::string shift;
    double level_shift = 0.0;
    bool symmetric = false;
    std::string out_file;
    std::string format = "svg";
    int threads = 0;
};

int run_patch(const PatchArgs& a, std::ostream& out, std::ostream& err) {
    const LatticeRank rank(a.n);
    const TileKind kind = a.kind == "rhombic" ? TileKind::rhombic : TileKind::triangular;
    LatticeKind lattice = kind == TileKind::rhombic ? LatticeKind::weight : LatticeKind::root;
    if (!a.lattice.empty()) lattice = a.lattice == "root" ? LatticeKind::root : LatticeKind::weight;
    if ((kind == TileKind::rhombic) != (lattice == LatticeKind::weight))
        throw UsageError(std::string(tile_kind_name(kind)) + " patches are cut from the " +
                         (kind == TileKind::rhombic ? "weight" : "root") + " lattice");

    // A zero shift puts every triangle window on a lattice point's boundary.
    if (a.symmetric && kind == TileKind::triangular)
        throw UsageError("--symmetric applies to rhombic patches only");

    PatchOptions opt = a.symmetric ? symmetric_options(1.0) : PatchOptions{};
    opt.radius = a.radius > 0 ? a.radius : default_radius(a.n);
    if (!a.shift.empty()) opt.shift = parse_shift(a.shift);
    if (a.level_shift != 0.0) opt.level_shift = a.level_shift;
    opt.threads = a.threads;

    const Patch patch = generate_patch(rank, kind, lattice, opt);
    if (patch.singular > 0)
        err << "warning: " << patch.singular << " tile tests fell within the boundary tolerance and were dropped\n";
    const std::string text =
        a.format == "json" ? patch_to_json(patch) + "\n" : render_svg(patch, default_style(patch));
    if (a.out_file.empty() || a.out_file == "-") {
        out << text;
    } else {
        std::ofstream f(a.out_file, std::ios::binary);
        if (!f) throw UsageError("cannot write " + a.out_file);
        f << text;
    }
    if (patch.tiles.empty()) {
        err << "error: " << patch.diagnostic << '\n';
        return kFailed;
    }
    err << patch.tiles.size() << " tiles\n";
    return kOk;
}

int run_verify(const std::string& suite, bool json, std::ostream& out) {
    const auto checks = run_suite(suite);
    out << (json ? report_json(checks) + "\n" : report_text(checks));
    for (const auto& c : checks)
        if (!c.pass) return kFailed;
    return kOk;
}

int run_project(int n, const std::string& signs, bool json, std::ostream& out) {
    const LatticeRank rank(n);
    const auto v = CubeVertex::parse(signs);
    const auto lifted = lift_cube_vertex(v, rank);
    const auto image = lifted.k_part;
    if (json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["signs"] = v.to_string();
        std::vector<std::string> k;
        for (const auto& c : image.k_coords()) k.push_back(to_string(c));
        j["k"] = k;
        j["l0"] = to_string(lifted.l0);
        j["minus_count"] = v.minus_count();
        out << j.dump(2) << '\n';
    } else {
        out << "1/2(" << v.to_string() << ") -> " << image.to_string() << "   (l_0 coefficient "
            << to_string(lifted.l0) << ", dropped)\n";
        const int j = v.minus_count();
        if (j == 0 || j == rank.h())
            out << "diagonal vertex: image is the origin\n";
        else
            out << "vertex of V(0) in the orbit of omega_" << j << '\n';
    }
    return kOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prototiles and cut-and-project patches of the A_n root lattice", "coxtile"};
    app.require_subcommand(1);

    std::string catalog_which;
    int catalog_n = 0;
    bool catalog_json_flag = false;
    auto* catalog = app.add_subcommand("catalog", "List rhombic or triangular prototiles");
    catalog->add_option("which", catalog_which, "rhombi or triangles")->required()->check(CLI::IsMember({"rhombi", "triangles"}));
    catalog->add_option("--n", catalog_n, "Lattice rank")->required();
    catalog->add_flag("--json", catalog_json_flag, "Emit JSON");

    PatchArgs pa;
    auto* patch = app.add_subcommand("patch", "Generate a cut-and-project patch");
    patch->add_option("--n", pa.n, "Lattice rank")->required();
    patch->add_option("--lattice", pa.lattice, "root or weight (default follows --kind)")->check(CLI::IsMember({"root", "weight"}));
    patch->add_option("--kind", pa.kind, "rhombic or triangular")->required()->check(CLI::IsMember({"rhombic", "triangular"}));
    patch->add_option("--radius", pa.radius, "Plane radius of the tile centroids")->check(CLI::PositiveNumber);
    patch->add_option("--shift", pa.shift, "Window shift g1,g2,... (n-2 values)");
    patch->add_option("--level-shift", pa.level_shift, "Level shift along l_0 (rhombic only)");
    patch->add_flag("--symmetric", pa.symmetric, "Zero shift with a tiny level shift (h-fold symmetric)");
    patch->add_option("--out", pa.out_file, "Output file (default stdout)");
    patch->add_option("--format", pa.format, "svg or json")->check(CLI::IsMember({"svg", "json"}));
    patch->add_option("--threads", pa.threads, "Worker threads (0: COXTILE_THREADS or all cores)");

    std::string suite = "all";
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "Run built-in verification suites");
    verify->add_option("--suite", suite, "tables, descent, eigen or all")->check(CLI::IsMember({"tables", "descent", "eigen", "all"}));
    verify->add_flag("--json", verify_json, "Emit JSON");

    std::string what;
    int project_n = 0;
    std::string signs;
    bool project_json = false;
    auto* project = app.add_subcommand("project", "Project a cube vertex of Z^{n+1} to A_n");
    project->add_option("what", what, "cube-vertex")->required()->check(CLI::IsMember({"cube-vertex"}));
    project->add_option("--n", project_n, "Lattice rank")->required();
    project->add_option("--signs", signs, "Sign pattern such as +-+++ (write --signs=-+... for a leading minus)")->required();
    project->add_flag("--json", project_json, "Emit JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (*catalog) return run_catalog(catalog_which, catalog_n, catalog_json_flag, out);
        if (*patch) return run_patch(pa, out, err);
        if (*verify) return run_verify(suite, verify_json, out);
        if (*project) return run_project(project_n, signs, project_json, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailed;
    }
    err << app.help();
    return kUsage;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_main(args, std::cout, std::cerr);
}

}  // namespace coxtile
