#include "coxtile/coxeter_projection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coxtile {

double PlanePoint::norm() const { return std::hypot(x, y); }

Eigensystem cartan_eigensystem(LatticeRank rank) {
    if (rank.n() < 2) throw std::invalid_argument("A_1 has no Coxeter plane (need n >= 2)");
    const int n = rank.n();
    const double h = rank.h();
    Eigensystem e;
    e.eigenvectors = Matrix<double>(n, n);
    for (int i = 0; i < n; ++i) {
        const int m = i + 1;
        e.exponents.push_back(m);
        e.eigenvalues.push_back(2.0 * (1.0 + std::cos(m * std::numbers::pi / h)));
        for (int j = 0; j < n; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;  // (-1)^(j+1), j 1-based
            e.eigenvectors(j, i) = sign * std::sin((j + 1) * m * std::numbers::pi / h);
        }
    }
    return e;
}

double eigen_residual(LatticeRank rank, const Eigensystem& eig) {
    const auto c = cartan_matrix(rank);
    const int n = rank.n();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double cx = 0.0;
            for (int l = 0; l < n; ++l) cx += static_cast<double>(c(j, l)) * eig.eigenvectors(l, i);
            worst = std::max(worst, std::abs(cx - eig.eigenvalues[i] * eig.eigenvectors(j, i)));
        }
    return worst;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Cyclic action of the Coxeter element on l-coordinates.
std::vector<double> rotate_l(const std::vector<double>& v) {
    std::vector<double> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[(j + 1) % v.size()] = v[j];
    return out;
}

}  // namespace

CoxeterFrame::CoxeterFrame(LatticeRank rank) : rank_(rank), eigen_(cartan_eigensystem(rank)) {
    const int n = rank.n();
    const int h = rank.h();

    ordering_.resize(h);
    ordering_[0] = 1;
    for (int j = 2; j <= h; ++j) ordering_[j - 1] = (j % 2 == 0) ? j / 2 + 1 : h + 1 - (j - 1) / 2;

    for (int i = 0; i < n; ++i) {
        std::vector<double> x(h, 0.0);
        const double norm = std::sqrt(eigen_.eigenvalues[i] * h / 2.0);
        for (int j = 0; j < n; ++j) {
            const double w = eigen_.eigenvectors(j, i) / norm;
            x[ordering_[j] - 1] += w;
            x[ordering_[j + 1] - 1] -= w;
        }
        eigen_frame_.push_back(std::move(x));
    }

    const auto& u = eigen_frame_.front();
    const auto& v = eigen_frame_.back();
    // Component of k_h along a sum-zero vector f is f[h-1].
    const double theta = std::atan2(v[h - 1], u[h - 1]);
    std::vector<double> ex(h), ey(h);
    for (int j = 0; j < h; ++j) {
        ex[j] = std::cos(theta) * u[j] + std::sin(theta) * v[j];
        ey[j] = -std::sin(theta) * u[j] + std::cos(theta) * v[j];
    }
    if (ey[0] < 0)
        for (auto& c : ey) c = -c;
    parallel_ = {std::move(ex), std::move(ey)};
    perp_.assign(eigen_frame_.begin() + 1, eigen_frame_.end() - 1);
    scale_ = std::sqrt(2.0 / h);

    for (int j = 0; j < h; ++j) {
        k_par_.push_back({parallel_[0][j], parallel_[1][j]});
        std::vector<double> p;
        for (const auto& f : perp_) p.push_back(f[j]);
        k_perp_.push_back(std::move(p));
    }
}

std::vector<double> CoxeterFrame::l_coords(const LatticeVector& v) const {
    if (!(v.rank() == rank_))
        throw std::invalid_argument("rank mismatch: frame for A_" + std::to_string(rank_.n()) + ", vector in A_" +
                                    std::to_string(v.rank().n()));
    const auto l = v.to(Basis::l).coords();
    std::vector<double> out;
    out.reserve(l.size());
    for (const auto& c : l) out.push_back(to_double(c));
    return out;
}

PlanePoint CoxeterFrame::project_parallel(const LatticeVector& v) const {
    const auto l = l_coords(v);
    return {dot(parallel_[0], l), dot(parallel_[1], l)};
}

std::vector<double> CoxeterFrame::project_perp(const LatticeVector& v) const {
    const auto l = l_coords(v);
    std::vector<double> out;
    for (const auto& f : perp_) out.push_back(dot(f, l));
    return out;
}

PlanePoint CoxeterFrame::plane_point(const LatticeVector& v) const { return project_parallel(v) * (1.0 / scale_); }

PlanePoint CoxeterFrame::project_parallel(std::span<const std::int64_t> k) const {
    PlanePoint p;
    for (std::size_t j = 0; j < k.size(); ++j) {
        p.x += static_cast<double>(k[j]) * k_par_[j].x;
        p.y += static_cast<double>(k[j]) * k_par_[j].y;
    }
    return p;
}

PlanePoint CoxeterFrame::plane_point(std::span<const std::int64_t> k) const {
    return project_parallel(k) * (1.0 / scale_);
}

void CoxeterFrame::project_perp(std::span<const std::int64_t> k, std::span<double> out) const {
    for (std::size_t d = 0; d < perp_.size(); ++d) {
        double s = 0.0;
        for (std::size_t j = 0; j < k.size(); ++j) s += static_cast<double>(k[j]) * k_perp_[j][d];
        out[d] = s;
    }
}

Matrix<double> coxeter_matrix_in_frame(const CoxeterFrame& frame) {
    std::vector<const std::vector<double>*> basis{&frame.basis_parallel()[0], &frame.basis_parallel()[1]};
    for (const auto& f : frame.basis_perp()) basis.push_back(&f);
    const std::size_t n = basis.size();
    Matrix<double> m(n, n);
    for (std::size_t b = 0; b < n; ++b) {
        const auto image = rotate_l(*basis[b]);
        for (std::size_t a = 0; a < n; ++a) m(a, b) = dot(*basis[a], image);
    }
    return m;
}

std::vector<double> coxeter_block_angles(const CoxeterFrame& frame, double tol) {
    const auto& xs = frame.eigen_frame();
    const int n = frame.rank().n();
    const int h = frame.rank().h();
    std::vector<double> angles;
    for (int m = 1; m <= n / 2; ++m) {
        const auto& a = xs[m - 1];
        const auto& b = xs[h - m - 1];
        const auto ra = rotate_l(a);
        const auto rb = rotate_l(b);
        const double b00 = dot(a, ra), b10 = dot(b, ra), b01 = dot(a, rb), b11 = dot(b, rb);
        // Invariance of the plane: the images must have unit norm inside it.
        const bool invariant = std::abs(b00 * b00 + b10 * b10 - 1.0) < tol && std::abs(b01 * b01 + b11 * b11 - 1.0) < tol;
        const bool rotation = std::abs(b00 - b11) < tol && std::abs(b01 + b10) < tol;
        if (!invariant || !rotation) {
            angles.push_back(std::nan(""));
            continue;
        }
        double t = std::atan2(b10, b00);
        if (t < 0) t += 2.0 * std::numbers::pi;
        angles.push_back(t);
    }
    return angles;
}

bool coxeter_rotation_check(const CoxeterFrame& frame, double tol) {
    const auto m = coxeter_matrix_in_frame(frame);
    const double t = 2.0 * std::numbers::pi / frame.rank().h();
    if (std::abs(m(0, 0) - std::cos(t)) > tol || std::abs(m(1, 1) - std::cos(t)) > tol) return false;
    if (std::abs(m(1, 0) - std::sin(t)) > tol || std::abs(m(0, 1) + std::sin(t)) > tol) return false;
    for (std::size_t r = 2; r < m.rows(); ++r)
        for (std::size_t c = 0; c < 2; ++c)
            if (std::abs(m(r, c)) > tol || std::abs(m(c, r)) > tol) return false;
    return true;
}

}  // namespace coxtile
