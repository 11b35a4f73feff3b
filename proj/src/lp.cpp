#include "coxtile/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace coxtile {

bool linear_feasible(const Matrix<double>& a, std::span<const double> b, std::span<const double> lo,
                     std::span<const double> hi, double tol) {
    const std::size_t m_eq = a.rows();
    const std::size_t nv = a.cols();
    if (b.size() != m_eq || lo.size() != nv || hi.size() != nv)
        throw std::invalid_argument("linear_feasible: shape mismatch");

    // Shift to y = x - lo >= 0; finite upper bounds become rows y + s = hi - lo.
    std::vector<std::size_t> bounded;
    for (std::size_t j = 0; j < nv; ++j) {
        if (hi[j] < lo[j]) return false;
        if (std::isfinite(hi[j])) bounded.push_back(j);
    }
    const std::size_t rows = m_eq + bounded.size();
    const std::size_t structural = nv + bounded.size();
    const std::size_t cols = structural + rows;  // plus one artificial per row
    Matrix<double> t(rows, cols + 1);
    const std::size_t rhs = cols;

    double scale = 1.0;
    for (std::size_t i = 0; i < m_eq; ++i) {
        double r = b[i];
        for (std::size_t j = 0; j < nv; ++j) {
            t(i, j) = a(i, j);
            r -= a(i, j) * lo[j];
        }
        t(i, rhs) = r;
    }
    for (std::size_t k = 0; k < bounded.size(); ++k) {
        const std::size_t i = m_eq + k;
        t(i, bounded[k]) = 1.0;
        t(i, nv + k) = 1.0;
        t(i, rhs) = hi[bounded[k]] - lo[bounded[k]];
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        if (t(i, rhs) < 0)
            for (std::size_t j = 0; j <= cols; ++j) t(i, j) = -t(i, j);
        t(i, structural + i) = 1.0;
        basis[i] = structural + i;
        scale = std::max(scale, std::abs(t(i, rhs)));
    }

    // Phase-1 objective: sum of artificials, expressed in the nonbasic columns.
    std::vector<double> obj(cols + 1, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < structural; ++j) obj[j] -= t(i, j);
    for (std::size_t i = 0; i < rows; ++i) obj[rhs] -= t(i, rhs);

    const double eps = 1e-12;
    for (std::size_t iter = 0; iter < 50000; ++iter) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (obj[j] < -eps) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = rows;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < rows; ++i) {
            if (t(i, enter) <= eps) continue;
            const double ratio = t(i, rhs) / t(i, enter);
            if (ratio < best - eps || (ratio <= best + eps && leave < rows && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == rows) break;  // unbounded direction; cannot happen in phase 1
        const double p = t(leave, enter);
        for (std::size_t j = 0; j <= cols; ++j) t(leave, j) /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave) continue;
            const double f = t(i, enter);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= cols; ++j) t(i, j) -= f * t(leave, j);
        }
        const double f = obj[enter];
        for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * t(leave, j);
        basis[leave] = enter;
    }
    return -obj[rhs] <= tol * scale;
}

bool in_convex_hull(const std::vector<std::vector<double>>& points, std::span<const double> x, double tol) {
    if (points.empty()) return false;
    const std::size_t d = x.size();
    Matrix<double> a(d + 1, points.size());
    std::vector<double> b(x.begin(), x.end());
    b.push_back(1.0);
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].size() != d) throw std::invalid_argument("in_convex_hull: dimension mismatch");
        for (std::size_t i = 0; i < d; ++i) a(i, j) = points[j][i];
        a(d, j) = 1.0;
    }
    const std::vector<double> lo(points.size(), 0.0);
    const std::vector<double> hi(points.size(), std::numeric_limits<double>::infinity());
    return linear_feasible(a, b, lo, hi, tol);
}

}  // namespace coxtile
