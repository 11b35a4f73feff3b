#include "coxtile/window.hpp"

#include "coxtile/cells.hpp"
#include "coxtile/lp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace coxtile {

namespace {

double det_double(std::vector<double> m, int n) {
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(m[r * n + c]) > std::abs(m[p * n + c])) p = r;
        if (m[p * n + c] == 0.0) return 0.0;
        if (p != c) {
            for (int k = 0; k < n; ++k) std::swap(m[p * n + k], m[c * n + k]);
            det = -det;
        }
        det *= m[c * n + c];
        for (int r = c + 1; r < n; ++r) {
            const double f = m[r * n + c] / m[c * n + c];
            for (int k = c; k < n; ++k) m[r * n + k] -= f * m[c * n + k];
        }
    }
    return det;
}

// Vector orthogonal to the rows of a (dims-1) x dims matrix, by cofactors.
std::vector<double> cofactor_normal(const std::vector<const std::vector<double>*>& rows, int dims) {
    std::vector<double> out(dims);
    const int k = dims - 1;
    for (int i = 0; i < dims; ++i) {
        std::vector<double> minor(k * k);
        for (int r = 0; r < k; ++r) {
            int cc = 0;
            for (int c = 0; c < dims; ++c)
                if (c != i) minor[r * k + cc++] = (*rows[r])[c];
        }
        out[i] = ((i % 2) ? -1.0 : 1.0) * det_double(minor, k);
    }
    return out;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<PlanePoint> convex_hull_2d(std::vector<PlanePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](PlanePoint a, PlanePoint b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    if (pts.size() < 3) return pts;
    std::vector<PlanePoint> hull(2 * pts.size());
    std::size_t k = 0;
    auto turn = [](PlanePoint o, PlanePoint a, PlanePoint b) { return (a - o).cross(b - o); };
    for (const auto& p : pts) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 1e-12) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && turn(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

double Zonotope::slack(std::span<const double> x) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < offsets.size(); ++f) {
        double s = 0.0;
        for (int d = 0; d < dims; ++d) s += normals[f * dims + d] * x[d];
        best = std::min(best, offsets[f] - std::abs(s));
    }
    return best;
}

Zonotope make_zonotope(std::vector<std::vector<double>> generators, int dims) {
    Zonotope z;
    z.dims = dims;
    z.generators = std::move(generators);
    if (dims <= 0) return z;
    std::vector<std::vector<double>> found;
    auto add_normal = [&](std::vector<double> u) {
        double norm = 0.0;
        for (double v : u) norm += v * v;
        norm = std::sqrt(norm);
        if (norm < 1e-9) return;
        for (auto& v : u) v /= norm;
        for (double v : u)
            if (std::abs(v) > 1e-9) {
                if (v < 0)
                    for (auto& w : u) w = -w;
                break;
            }
        for (const auto& f : found) {
            double diff = 0.0;
            for (int d = 0; d < dims; ++d) diff = std::max(diff, std::abs(f[d] - u[d]));
            if (diff < 1e-9) return;
        }
        found.push_back(std::move(u));
    };
    if (dims == 1) {
        add_normal({1.0});
    } else {
        const int g = static_cast<int>(z.generators.size());
        if (g < dims - 1) throw std::invalid_argument("zonotope needs at least dims - 1 generators");
        for_each_subset(g, dims - 1, [&](const std::vector<int>& idx) {
            std::vector<const std::vector<double>*> rows;
            for (int i : idx) rows.push_back(&z.generators[i]);
            add_normal(cofactor_normal(rows, dims));
        });
    }
    for (const auto& u : found) {
        double b = 0.0;
        for (const auto& gen : z.generators) {
            double s = 0.0;
            for (int d = 0; d < dims; ++d) s += gen[d] * u[d];
            b += 0.5 * std::abs(s);
        }
        if (b < 1e-12) continue;  // the generators do not span this direction
        z.normals.insert(z.normals.end(), u.begin(), u.end());
        z.offsets.push_back(b);
    }
    return z;
}

const char* membership_name(Membership m) {
    switch (m) {
        case Membership::inside: return "inside";
        case Membership::outside: return "outside";
        case Membership::singular: return "singular";
    }
    return "?";
}

Membership classify_margin(double margin, double tol) {
    if (margin > tol) return Membership::inside;
    if (margin < -tol) return Membership::outside;
    return Membership::singular;
}

Window build_window(LatticeRank rank, std::vector<double> shift, double tolerance) {
    if (rank.n() < 3) throw std::invalid_argument("the window needs n >= 3 (E_perp is trivial below)");
    CoxeterFrame frame(rank);
    const int dims = static_cast<int>(frame.perp_dim());
    if (shift.empty()) shift.assign(dims, 0.0);
    if (static_cast<int>(shift.size()) != dims)
        throw std::invalid_argument("shift has " + std::to_string(shift.size()) + " components, E_perp has " +
                                    std::to_string(dims));
    Window w{frame, {}, std::move(shift), tolerance, {}, {}, 0.0};
    for (const auto& v : voronoi_vertices(rank).vertices) {
        auto p = frame.project_perp(v);
        double r = 0.0;
        for (double c : p) r += c * c;
        w.circumradius = std::max(w.circumradius, std::sqrt(r));
        w.perp_points.push_back(std::move(p));
    }
    w.hull = make_zonotope(frame.k_perp(), dims);
    if (dims == 2) {
        std::vector<PlanePoint> pts;
        for (const auto& p : w.perp_points) pts.push_back({p[0], p[1]});
        w.boundary = convex_hull_2d(std::move(pts));
    }
    return w;
}

double window_margin(std::span<const double> perp, const Window& w) {
    std::vector<double> x(perp.begin(), perp.end());
    for (std::size_t d = 0; d < x.size(); ++d) x[d] -= w.shift[d];
    if (!w.boundary.empty()) {
        const PlanePoint p{x[0], x[1]};
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < w.boundary.size(); ++i) {
            const PlanePoint a = w.boundary[i];
            const PlanePoint e = w.boundary[(i + 1) % w.boundary.size()] - a;
            best = std::min(best, e.cross(p - a) / e.norm());
        }
        return best;
    }
    return w.hull.slack(x);
}

Membership accept_perp(std::span<const double> perp, const Window& w) {
    return classify_margin(window_margin(perp, w), w.tolerance);
}

Membership accept(const LatticeVector& q, const Window& w) {
    const auto perp = w.frame.project_perp(q);
    return accept_perp(perp, w);
}

bool accept_lp(const LatticeVector& q, const Window& w) {
    auto x = w.frame.project_perp(q);
    for (std::size_t d = 0; d < x.size(); ++d) x[d] -= w.shift[d];
    return in_convex_hull(w.perp_points, x, w.tolerance);
}

int lattice_index(const LatticeVector& q) {
    const auto k = q.integral_k_coords();
    const int h = q.rank().h();
    std::int64_t s = 0;
    for (auto c : k) s += c;
    return static_cast<int>(((s % h) + h) % h);
}

int debruijn_index(const LatticeVector& q) {
    if (q.rank().n() != 4) throw std::invalid_argument("the de Bruijn index is defined for n = 4 only");
    return lattice_index(q);
}

}  // namespace coxtile
