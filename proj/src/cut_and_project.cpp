#include "coxtile/cut_and_project.hpp"

#include "coxtile/prototile_catalog.hpp"
#include "coxtile/simd/kernels.hpp"
#include "coxtile/window.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace coxtile {

const char* lattice_name(LatticeKind k) { return k == LatticeKind::root ? "root" : "weight"; }
const char* tile_kind_name(TileKind k) { return k == TileKind::rhombic ? "rhombic" : "triangular"; }

PlanePoint Tile::centroid() const {
    PlanePoint c;
    for (const auto& v : vertices) c = c + v;
    return c * (1.0 / static_cast<double>(vertices.size()));
}

double Tile::area() const { return Polygon{vertices}.signed_area(); }

std::vector<double> default_shift(LatticeRank rank) {
    std::vector<double> g;
    for (int d = 0; d + 3 <= rank.n(); ++d) g.push_back((d + 1) * 1e-4 * std::numbers::sqrt2);
    return g;
}

PatchOptions symmetric_options(double radius) {
    PatchOptions o;
    o.radius = radius;
    o.shift = std::vector<double>{};
    o.level_shift = 1e-5;
    return o;
}

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("COXTILE_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Integer vectors z with z^T G z <= bound (Fincke-Pohst over the Cholesky factor).
std::vector<std::vector<std::int64_t>> short_vectors(const Matrix<double>& g, double bound) {
    const int n = static_cast<int>(g.rows());
    Matrix<double> r(n, n);
    for (int i = 0; i < n; ++i) {
        double d = g(i, i);
        for (int k = 0; k < i; ++k) d -= r(k, i) * r(k, i);
        if (d <= 0) throw std::logic_error("short_vectors: form is not positive definite");
        r(i, i) = std::sqrt(d);
        for (int j = i + 1; j < n; ++j) {
            double s = g(i, j);
            for (int k = 0; k < i; ++k) s -= r(k, i) * r(k, j);
            r(i, j) = s / r(i, i);
        }
    }
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> z(n, 0);
    std::function<void(int, double)> descend = [&](int i, double budget) {
        double centre = 0.0;
        for (int j = i + 1; j < n; ++j) centre -= r(i, j) * static_cast<double>(z[j]);
        centre /= r(i, i);
        const double half = std::sqrt(std::max(budget, 0.0)) / r(i, i);
        const auto lo = static_cast<std::int64_t>(std::ceil(centre - half - 1e-9));
        const auto hi = static_cast<std::int64_t>(std::floor(centre + half + 1e-9));
        for (std::int64_t v = lo; v <= hi; ++v) {
            z[i] = v;
            const double t = r(i, i) * (static_cast<double>(v) - centre);
            const double rest = budget - t * t;
            if (rest < -1e-9) continue;
            if (i == 0)
                out.push_back(z);
            else
                descend(i - 1, rest);
        }
        z[i] = 0;
    };
    descend(n - 1, bound);
    return out;
}

std::vector<std::vector<std::int64_t>> lattice_basis(LatticeRank rank, LatticeKind lattice) {
    const int h = rank.h();
    std::vector<std::vector<std::int64_t>> basis;
    for (int i = 0; i < rank.n(); ++i) {
        std::vector<std::int64_t> b(h, 0);
        b[i] = 1;
        if (lattice == LatticeKind::root) b[i + 1] = -1;
        basis.push_back(std::move(b));
    }
    return basis;
}

void canonicalize(std::vector<std::int64_t>& k) {
    const auto last = k.back();
    for (auto& c : k) c -= last;
}

// Counter-clockwise, starting at the lexicographically smallest vertex.
std::vector<PlanePoint> canonical_polygon(std::vector<PlanePoint> v) {
    if (Polygon{v}.signed_area() < 0) std::reverse(v.begin(), v.end());
    auto less = [](PlanePoint a, PlanePoint b) {
        if (std::abs(a.x - b.x) > 1e-9) return a.x < b.x;
        return a.y < b.y - 1e-9;
    };
    const auto first = std::min_element(v.begin(), v.end(), less);
    std::rotate(v.begin(), first, v.end());
    return v;
}

std::int64_t quantize(double x) { return std::llround(x * 1e9); }

bool same_vertices(const Tile& a, const Tile& b, double tol) {
    if (a.vertices.size() != b.vertices.size()) return false;
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
        if ((a.vertices[i] - b.vertices[i]).norm() > tol) return false;
    return true;
}

// Per-candidate data shared by both generators, in structure-of-arrays form.
struct CandidateBatch {
    std::vector<std::vector<std::int64_t>> points;
    std::vector<double> perp;  // dims x n
    std::vector<double> par;   // 2 x n
};

CandidateBatch project_candidates(const CoxeterFrame& frame, std::vector<std::vector<std::int64_t>> points) {
    const auto& kern = simd::active_kernels();
    const int h = frame.rank().h();
    const int dims = static_cast<int>(frame.perp_dim());
    const std::size_t n = points.size();
    std::vector<double> coords(h * n);
    for (std::size_t i = 0; i < n; ++i)
        for (int j = 0; j < h; ++j) coords[j * n + i] = static_cast<double>(points[i][j]);
    std::vector<double> perp_table(h * dims), par_table(h * 2);
    for (int j = 0; j < h; ++j) {
        for (int d = 0; d < dims; ++d) perp_table[j * dims + d] = frame.k_perp()[j][d];
        par_table[j * 2] = frame.k_parallel()[j].x;
        par_table[j * 2 + 1] = frame.k_parallel()[j].y;
    }
    CandidateBatch batch{std::move(points), std::vector<double>(dims * n), std::vector<double>(2 * n)};
    if (n == 0) return batch;
    if (dims > 0) kern.project(coords.data(), n, n, perp_table.data(), h, dims, batch.perp.data());
    kern.project(coords.data(), n, n, par_table.data(), h, 2, batch.par.data());
    return batch;
}

// Indices of candidates whose perp image minus the shift lies in V(0)_perp.
std::vector<std::size_t> window_survivors(const CandidateBatch& batch, const Window* window, double tol) {
    const std::size_t n = batch.points.size();
    std::vector<std::size_t> keep;
    if (!window || window->dims() == 0) {
        for (std::size_t i = 0; i < n; ++i) keep.push_back(i);
        return keep;
    }
    const int dims = window->dims();
    std::vector<double> shifted(batch.perp);
    for (int d = 0; d < dims; ++d)
        for (std::size_t i = 0; i < n; ++i) shifted[d * n + i] -= window->shift[d];
    std::vector<double> slack(n);
    const auto& z = window->hull;
    simd::active_kernels().slack(shifted.data(), n, n, dims, z.normals.data(), z.offsets.data(),
                                 static_cast<int>(z.facet_count()), slack.data());
    for (std::size_t i = 0; i < n; ++i)
        if (slack[i] >= -tol) keep.push_back(i);
    return keep;
}

// One dual-face test: w = A x + o must lie in [lo, hi]^rows.
struct FaceSystem {
    std::string cls;
    std::vector<std::int64_t> indices;         // appended to the tile source
    std::vector<std::vector<int>> corners;     // signed k-index offsets of each corner from the anchor
    std::vector<double> a;                     // rows x dims
    std::vector<double> o;
    int rows = 0;
};

struct TileEmitter {
    const CoxeterFrame& frame;
    double radius;
    double tol;

    Tile make(const std::vector<std::int64_t>& anchor, PlanePoint anchor_plane, const FaceSystem& sys) const {
        const double inv_s = 1.0 / frame.scale();
        std::vector<PlanePoint> verts;
        for (const auto& corner : sys.corners) {
            PlanePoint p = anchor_plane;
            for (int idx : corner) {
                const PlanePoint k = frame.k_parallel()[std::abs(idx) - 1] * inv_s;
                p = idx > 0 ? p + k : p - k;
            }
            verts.push_back(p);
        }
        Tile t{sys.cls, canonical_polygon(std::move(verts)), anchor};
        t.source.insert(t.source.end(), sys.indices.begin(), sys.indices.end());
        return t;
    }
};

struct ChunkResult {
    std::vector<Tile> tiles;
    std::size_t singular = 0;
};

// Runs every face system over the survivors, split across threads.
void run_face_tests(const CandidateBatch& batch, const std::vector<std::size_t>& survivors,
                    const std::vector<double>& x, int xdims, const std::vector<FaceSystem>& systems, double lo,
                    double hi, const TileEmitter& emit, int threads, Patch& patch) {
    const std::size_t m = survivors.size();
    if (m == 0) return;
    const auto& kern = simd::active_kernels();
    const std::size_t n = batch.points.size();
    const double inv_s = 1.0 / emit.frame.scale();
    const int workers = static_cast<int>(std::min<std::size_t>(std::max(threads, 1), m));
    std::vector<ChunkResult> results(workers);
    auto work = [&](int w) {
        const std::size_t begin = m * w / workers;
        const std::size_t end = m * (w + 1) / workers;
        const std::size_t len = end - begin;
        std::vector<double> margin(len);
        for (const auto& sys : systems) {
            kern.box_margin(x.data() + begin, len, m, xdims, sys.a.data(), sys.o.data(), sys.rows, lo, hi,
                            margin.data());
            for (std::size_t t = 0; t < len; ++t) {
                if (margin[t] < -emit.tol) continue;
                const std::size_t ci = survivors[begin + t];
                const PlanePoint anchor{batch.par[ci] * inv_s, batch.par[n + ci] * inv_s};
                Tile tile = emit.make(batch.points[ci], anchor, sys);
                if (tile.centroid().norm() > emit.radius) continue;
                if (margin[t] <= emit.tol) {
                    ++results[w].singular;
                    continue;
                }
                results[w].tiles.push_back(std::move(tile));
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (auto& r : results) {
        patch.singular += r.singular;
        for (auto& t : r.tiles) patch.tiles.push_back(std::move(t));
    }
}

void finish_patch(Patch& patch) {
    sort_tiles(patch.tiles);
    std::vector<Tile> unique;
    for (auto& t : patch.tiles)
        if (unique.empty() || unique.back().cls != t.cls || !same_vertices(unique.back(), t, 1e-9))
            unique.push_back(std::move(t));
    patch.tiles = std::move(unique);
    if (patch.tiles.empty())
        patch.diagnostic = "no tile passed the window test; the shift or radius may be pathological";
}

void validate_common(LatticeRank rank, const PatchOptions& options, int min_n, const char* what) {
    if (rank.n() < min_n)
        throw std::invalid_argument(std::string(what) + " patches need n >= " + std::to_string(min_n));
    if (!(options.radius > 0)) throw std::invalid_argument("patch radius must be positive");
    if (!(options.tolerance >= 0)) throw std::invalid_argument("tolerance must be non-negative");
}

double vector_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

std::vector<std::vector<std::int64_t>> lattice_points_in_cylinder(LatticeRank rank, LatticeKind lattice,
                                                                  double parallel_radius, double perp_radius) {
    if (rank.n() < 2) throw std::invalid_argument("cylinder enumeration needs n >= 2");
    if (!(parallel_radius > 0)) throw std::invalid_argument("parallel radius must be positive");
    const CoxeterFrame frame(rank);
    const int n = rank.n();
    const int dims = static_cast<int>(frame.perp_dim());
    if (dims > 0 && !(perp_radius > 0)) throw std::invalid_argument("perp radius must be positive");
    const auto basis = lattice_basis(rank, lattice);

    // Ellipsoid |q_par|^2 / R^2 + |q_perp|^2 / rho^2 <= 2 contains the cylinder.
    Matrix<double> y(n, n);
    std::vector<double> perp(dims);
    for (int i = 0; i < n; ++i) {
        const PlanePoint p = frame.project_parallel(basis[i]);
        y(0, i) = p.x / parallel_radius;
        y(1, i) = p.y / parallel_radius;
        frame.project_perp(basis[i], perp);
        for (int d = 0; d < dims; ++d) y(2 + d, i) = perp[d] / perp_radius;
    }
    const auto g = y.transposed() * y;

    std::vector<std::vector<std::int64_t>> out;
    for (const auto& z : short_vectors(g, 2.0)) {
        std::vector<std::int64_t> k(rank.h(), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < rank.h(); ++j) k[j] += z[i] * basis[i][j];
        canonicalize(k);
        if (frame.project_parallel(k).norm() > parallel_radius) continue;
        frame.project_perp(k, perp);
        if (vector_norm(perp) > perp_radius) continue;
        out.push_back(std::move(k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Patch generate_rhombic_patch(LatticeRank rank, const PatchOptions& options) {
    validate_common(rank, options, 3, "rhombic");
    const Window window = build_window(rank, options.shift.value_or(default_shift(rank)), options.tolerance);
    const CoxeterFrame& frame = window.frame;
    const int h = rank.h();
    const int dims = window.dims();
    const double tau = options.level_shift;

    Patch patch;
    patch.rank = rank;
    patch.lattice = LatticeKind::weight;
    patch.kind = TileKind::rhombic;
    patch.radius = options.radius;
    patch.shift = window.shift;
    patch.level_shift = tau;

    const double par_r = (options.radius + 2.0) * frame.scale();
    const double perp_r = window.circumradius + vector_norm(window.shift) + 1e-6;
    auto batch = project_candidates(frame, lattice_points_in_cylinder(rank, LatticeKind::weight, par_r, perp_r));
    patch.candidates = batch.points.size();
    const auto survivors = window_survivors(batch, &window, options.tolerance);

    // x = (q_perp, L) for every survivor, dimension-major.
    const std::size_t m = survivors.size();
    const std::size_t n = batch.points.size();
    const int xdims = dims + 1;
    std::vector<double> x(xdims * m);
    for (std::size_t t = 0; t < m; ++t) {
        const auto& k = batch.points[survivors[t]];
        std::int64_t sum = 0;
        for (auto c : k) sum += c;
        const int r = static_cast<int>(((sum % h) + h) % h);
        const double level = r + h * std::ceil((tau - r) / h);
        for (int d = 0; d < dims; ++d) x[d * m + t] = batch.perp[d * n + survivors[t]];
        x[dims * m + t] = level;
    }

    std::vector<FaceSystem> systems;
    for (int a = 1; a <= h; ++a)
        for (int b = a + 1; b <= h; ++b) {
            const auto cls = classify_rhombus(a, b, rank);
            if (!cls) continue;
            Matrix<double> mat(xdims, xdims);
            int col = 0;
            for (int c = 1; c <= h; ++c) {
                if (c == a || c == b) continue;
                for (int d = 0; d < dims; ++d) mat(d, col) = frame.k_perp()[c - 1][d];
                mat(dims, col) = 1.0;
                ++col;
            }
            const auto inv = inverse(mat);
            if (!inv) throw std::logic_error("dual face system singular for a non-degenerate rhombus");
            FaceSystem sys{cls->id(), {a, b}, {{}, {a}, {a, b}, {b}}, inv->data(), std::vector<double>(xdims), xdims};
            std::vector<double> rhs(window.shift);
            rhs.push_back(tau);
            for (int r = 0; r < xdims; ++r)
                for (int c = 0; c < xdims; ++c) sys.o[r] -= (*inv)(r, c) * rhs[c];
            systems.push_back(std::move(sys));
        }

    TileEmitter emit{frame, options.radius, options.tolerance};
    run_face_tests(batch, survivors, x, xdims, systems, 0.0, 1.0, emit, resolve_threads(options.threads), patch);
    finish_patch(patch);
    return patch;
}

Patch generate_triangular_patch(LatticeRank rank, const PatchOptions& options) {
    validate_common(rank, options, 2, "triangular");
    const CoxeterFrame frame(rank);
    const int h = rank.h();
    const int dims = static_cast<int>(frame.perp_dim());
    std::optional<Window> window;
    std::vector<double> shift = options.shift.value_or(default_shift(rank));
    if (dims > 0) {
        window = build_window(rank, shift, options.tolerance);
        shift = window->shift;
    } else if (!shift.empty()) {
        throw std::invalid_argument("A_2 has no perpendicular space; the shift must be empty");
    }

    Patch patch;
    patch.rank = rank;
    patch.lattice = LatticeKind::root;
    patch.kind = TileKind::triangular;
    patch.radius = options.radius;
    patch.shift = shift;

    const double par_r = (options.radius + 2.0) * frame.scale();
    const double perp_r = window ? window->circumradius + vector_norm(shift) + 1e-6 : 0.0;
    auto batch = project_candidates(frame, lattice_points_in_cylinder(rank, LatticeKind::root, par_r, perp_r));
    patch.candidates = batch.points.size();
    const auto survivors = window_survivors(batch, window ? &*window : nullptr, options.tolerance);

    const std::size_t m = survivors.size();
    const std::size_t n = batch.points.size();
    std::vector<double> x(dims * m);
    for (std::size_t t = 0; t < m; ++t)
        for (int d = 0; d < dims; ++d) x[d * m + t] = batch.perp[d * n + survivors[t]];

    // Each triangle is enumerated once: the lone index is the smallest of the triple.
    std::vector<FaceSystem> systems;
    for (int sign : {+1, -1})
        for (int i = 1; i <= h; ++i)
            for (int j = i + 1; j <= h; ++j)
                for (int l = j + 1; l <= h; ++l) {
                    Matrix<double> mat(dims, dims);
                    int col = 0;
                    for (int c = 1; c <= h; ++c) {
                        if (c == i || c == j || c == l) continue;
                        for (int d = 0; d < dims; ++d) mat(d, col) = frame.k_perp()[c - 1][d];
                        ++col;
                    }
                    const auto inv = inverse(mat);
                    if (!inv) throw std::logic_error("dual face system singular for a Delone triangle");
                    std::vector<double> centre(dims);
                    for (int d = 0; d < dims; ++d)
                        centre[d] = 0.5 * sign *
                                    (frame.k_perp()[i - 1][d] - frame.k_perp()[j - 1][d] - frame.k_perp()[l - 1][d]);
                    FaceSystem sys;
                    sys.cls = classify_triangle(i, j, l, rank).id();
                    sys.indices = {sign * i, j, l};
                    sys.corners = {{}, {sign * i, -sign * j}, {sign * i, -sign * l}};
                    sys.rows = dims;
                    sys.a.resize(dims * dims);
                    sys.o.assign(dims, 0.0);
                    for (int r = 0; r < dims; ++r)
                        for (int c = 0; c < dims; ++c) {
                            sys.a[r * dims + c] = -(*inv)(r, c);
                            sys.o[r] += (*inv)(r, c) * (shift[c] - centre[c]);
                        }
                    systems.push_back(std::move(sys));
                }

    TileEmitter emit{frame, options.radius, options.tolerance};
    run_face_tests(batch, survivors, x, dims, systems, -0.5, 0.5, emit, resolve_threads(options.threads), patch);
    finish_patch(patch);
    return patch;
}

Patch generate_patch(LatticeRank rank, TileKind kind, LatticeKind lattice, const PatchOptions& options) {
    if (kind == TileKind::rhombic && lattice != LatticeKind::weight)
        throw std::invalid_argument("rhombic patches are cut from the weight lattice");
    if (kind == TileKind::triangular && lattice != LatticeKind::root)
        throw std::invalid_argument("triangular patches are cut from the root lattice");
    return kind == TileKind::rhombic ? generate_rhombic_patch(rank, options) : generate_triangular_patch(rank, options);
}

std::vector<LatticeVector> tile_lattice_vertices(const Patch& patch, const Tile& tile) {
    const int h = patch.rank.h();
    if (tile.source.size() < static_cast<std::size_t>(h) + 2)
        throw std::invalid_argument("tile source is too short");
    const std::vector<std::int64_t> anchor(tile.source.begin(), tile.source.begin() + h);
    const std::vector<std::int64_t> idx(tile.source.begin() + h, tile.source.end());
    std::vector<std::vector<int>> corners;
    if (patch.kind == TileKind::rhombic) {
        const int a = static_cast<int>(idx[0]), b = static_cast<int>(idx[1]);
        corners = {{}, {a}, {a, b}, {b}};
    } else {
        const int si = static_cast<int>(idx[0]);
        const int sign = si > 0 ? 1 : -1;
        corners = {{}, {si, -sign * static_cast<int>(idx[1])}, {si, -sign * static_cast<int>(idx[2])}};
    }
    const CoxeterFrame frame(patch.rank);
    std::vector<LatticeVector> points;
    std::vector<PlanePoint> plane;
    for (const auto& corner : corners) {
        auto k = anchor;
        for (int c : corner) k[std::abs(c) - 1] += c > 0 ? 1 : -1;
        canonicalize(k);
        plane.push_back(frame.plane_point(k));
        points.push_back(LatticeVector::from_k(patch.rank, k));
    }
    std::vector<LatticeVector> ordered;
    for (const auto& v : tile.vertices) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < plane.size(); ++i)
            if ((plane[i] - v).norm() < (plane[best] - v).norm()) best = i;
        ordered.push_back(points[best]);
    }
    return ordered;
}

std::vector<LatticeVector> patch_vertices(const Patch& patch) {
    std::vector<LatticeVector> all;
    for (const auto& t : patch.tiles)
        for (auto& v : tile_lattice_vertices(patch, t)) all.push_back(std::move(v));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

std::vector<int> class_order_key(const std::string& cls) {
    std::vector<int> key{cls.rfind("rhombus", 0) == 0 ? 0 : 1};
    int cur = -1;
    for (char c : cls) {
        if (c >= '0' && c <= '9') {
            cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
        } else if (cur >= 0) {
            key.push_back(cur);
            cur = -1;
        }
    }
    if (cur >= 0) key.push_back(cur);
    return key;
}

void sort_tiles(std::vector<Tile>& tiles) {
    std::stable_sort(tiles.begin(), tiles.end(), [](const Tile& a, const Tile& b) {
        const auto ka = class_order_key(a.cls), kb = class_order_key(b.cls);
        if (ka != kb) return ka < kb;
        const std::size_t n = std::min(a.vertices.size(), b.vertices.size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto ax = quantize(a.vertices[i].x), bx = quantize(b.vertices[i].x);
            if (ax != bx) return ax < bx;
            const auto ay = quantize(a.vertices[i].y), by = quantize(b.vertices[i].y);
            if (ay != by) return ay < by;
        }
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.source < b.source;
    });
}

double convex_overlap_area(const std::vector<PlanePoint>& a, const std::vector<PlanePoint>& b) {
    std::vector<PlanePoint> poly = a;
    for (std::size_t e = 0; e < b.size() && !poly.empty(); ++e) {
        const PlanePoint p0 = b[e];
        const PlanePoint d = b[(e + 1) % b.size()] - p0;
        std::vector<PlanePoint> next;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const PlanePoint cur = poly[i];
            const PlanePoint nxt = poly[(i + 1) % poly.size()];
            const double sc = d.cross(cur - p0), sn = d.cross(nxt - p0);
            if (sc >= 0) next.push_back(cur);
            if ((sc >= 0) != (sn >= 0)) {
                const double t = sc / (sc - sn);
                next.push_back(cur + (nxt - cur) * t);
            }
        }
        poly = std::move(next);
    }
    if (poly.size() < 3) return 0.0;
    return std::max(0.0, Polygon{poly}.signed_area());
}

TilingReport check_tiling(const Patch& patch, double tol) {
    TilingReport rep;
    const auto& tiles = patch.tiles;
    struct Box {
        double x0, x1, y0, y1;
    };
    std::vector<Box> boxes;
    for (const auto& t : tiles) {
        Box b{1e300, -1e300, 1e300, -1e300};
        for (const auto& v : t.vertices) {
            b.x0 = std::min(b.x0, v.x);
            b.x1 = std::max(b.x1, v.x);
            b.y0 = std::min(b.y0, v.y);
            b.y1 = std::max(b.y1, v.y);
        }
        boxes.push_back(b);
    }
    std::vector<std::size_t> order(tiles.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return boxes[a].x0 < boxes[b].x0; });

    auto note = [&](const std::string& what, std::size_t a, std::size_t b) {
        rep.valid = false;
        if (rep.first_problem.empty())
            rep.first_problem = what + " between tiles " + std::to_string(a) + " and " + std::to_string(b);
    };
    // Vertex v strictly inside segment [p, q]?
    auto on_edge_interior = [&](PlanePoint v, PlanePoint p, PlanePoint q) {
        const PlanePoint d = q - p;
        const double len = d.norm();
        if (std::abs(d.cross(v - p)) / len > tol) return false;
        const double t = d.dot(v - p) / (len * len);
        return t * len > tol && (1 - t) * len > tol;
    };

    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const std::size_t i = order[oi];
        for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
            const std::size_t j = order[oj];
            if (boxes[j].x0 > boxes[i].x1 + tol) break;
            if (boxes[j].y0 > boxes[i].y1 + tol || boxes[i].y0 > boxes[j].y1 + tol) continue;
            ++rep.pairs_checked;
            const auto& a = tiles[i].vertices;
            const auto& b = tiles[j].vertices;
            const double area = convex_overlap_area(a, b);
            if (area > tol * std::min(tiles[i].area(), tiles[j].area())) {
                ++rep.overlaps;
                note("interior overlap", i, j);
                continue;
            }
            std::vector<std::pair<std::size_t, std::size_t>> shared;
            for (std::size_t p = 0; p < a.size(); ++p)
                for (std::size_t q = 0; q < b.size(); ++q)
                    if ((a[p] - b[q]).norm() <= tol) shared.emplace_back(p, q);
            bool tj = false;
            for (const auto& v : a)
                for (std::size_t q = 0; q < b.size(); ++q) tj = tj || on_edge_interior(v, b[q], b[(q + 1) % b.size()]);
            for (const auto& v : b)
                for (std::size_t p = 0; p < a.size(); ++p) tj = tj || on_edge_interior(v, a[p], a[(p + 1) % a.size()]);
            if (tj) {
                ++rep.t_junctions;
                note("vertex inside an edge", i, j);
                continue;
            }
            if (shared.size() > 2) {
                ++rep.bad_contacts;
                note("more than two shared vertices", i, j);
            } else if (shared.size() == 2) {
                auto adjacent = [](std::size_t u, std::size_t v, std::size_t size) {
                    return (u + 1) % size == v || (v + 1) % size == u;
                };
                if (!adjacent(shared[0].first, shared[1].first, a.size()) ||
                    !adjacent(shared[0].second, shared[1].second, b.size())) {
                    ++rep.bad_contacts;
                    note("two shared vertices that are not a common edge", i, j);
                }
            }
        }
    }
    return rep;
}

SymmetryReport patch_symmetry_report(const Patch& patch, double tol) {
    if (patch.tiles.empty()) throw std::invalid_argument("symmetry of an empty patch is undefined");
    SymmetryReport rep;
    for (const auto& t : patch.tiles) rep.center = rep.center + t.centroid();
    rep.center = rep.center * (1.0 / static_cast<double>(patch.tiles.size()));

    const double cell = 1e-3;
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> grid;
    auto cell_of = [&](PlanePoint p) {
        return std::make_pair(static_cast<std::int64_t>(std::floor(p.x / cell)),
                              static_cast<std::int64_t>(std::floor(p.y / cell)));
    };
    for (std::size_t i = 0; i < patch.tiles.size(); ++i) grid[cell_of(patch.tiles[i].centroid())].push_back(i);

    auto matches = [&](const Tile& rotated) {
        const auto [cx, cy] = cell_of(rotated.centroid());
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto it = grid.find({cx + dx, cy + dy});
                if (it == grid.end()) continue;
                for (std::size_t k : it->second) {
                    const Tile& cand = patch.tiles[k];
                    if (cand.cls != rotated.cls || cand.vertices.size() != rotated.vertices.size()) continue;
                    bool all = true;
                    for (const auto& v : rotated.vertices) {
                        bool found = false;
                        for (const auto& w : cand.vertices) found = found || (v - w).norm() <= tol;
                        all = all && found;
                    }
                    if (all) return true;
                }
            }
        return false;
    };

    const int two_h = 2 * patch.rank.h();
    for (int d = two_h; d >= 2; --d) {
        if (two_h % d) continue;
        const double c = std::cos(2.0 * std::numbers::pi / d), s = std::sin(2.0 * std::numbers::pi / d);
        bool ok = true;
        for (const auto& t : patch.tiles) {
            Tile r{t.cls, {}, {}};
            for (const auto& v : t.vertices) {
                const PlanePoint u = v - rep.center;
                r.vertices.push_back(rep.center + PlanePoint{c * u.x - s * u.y, s * u.x + c * u.y});
            }
            if (!matches(r)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            rep.order = d;
            break;
        }
    }
    return rep;
}

}  // namespace coxtile
