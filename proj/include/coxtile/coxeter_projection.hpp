#pragma once

// Coxeter plane E_par and its orthogonal complement E_perp for A_n, built
// from the closed-form eigensystem of the Cartan matrix.

#include "coxtile/matrix.hpp"
#include "coxtile/root_lattice.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace coxtile {

struct PlanePoint {
    double x = 0.0;
    double y = 0.0;

    PlanePoint operator+(PlanePoint o) const { return {x + o.x, y + o.y}; }
    PlanePoint operator-(PlanePoint o) const { return {x - o.x, y - o.y}; }
    PlanePoint operator*(double s) const { return {x * s, y * s}; }
    double dot(PlanePoint o) const { return x * o.x + y * o.y; }
    double cross(PlanePoint o) const { return x * o.y - y * o.x; }
    double norm() const;
};

struct Eigensystem {
    std::vector<int> exponents;       // m_i = 1..n
    std::vector<double> eigenvalues;  // lambda_i = 2(1 + cos(m_i pi / h))
    Matrix<double> eigenvectors;      // (j, i) = X_ji = (-1)^(j+1) sin(j m_i pi / h)
};

// Throws std::invalid_argument for n = 1 (there is no Coxeter plane).
Eigensystem cartan_eigensystem(LatticeRank rank);

// Largest |(C X - X Lambda)_ji| over all entries.
double eigen_residual(LatticeRank rank, const Eigensystem& eig);

class CoxeterFrame {
public:
    explicit CoxeterFrame(LatticeRank rank);

    LatticeRank rank() const { return rank_; }
    const Eigensystem& eigensystem() const { return eigen_; }

    // x_hat_1..x_hat_n in eigen order, as l-coordinate vectors.
    const std::vector<std::vector<double>>& eigen_frame() const { return eigen_frame_; }
    // Rotated (x_hat_1, x_hat_n) pair: k_{n+1} lands on the positive x-axis and
    // k_j at angle 2 pi j / h.
    const std::array<std::vector<double>, 2>& basis_parallel() const { return parallel_; }
    // x_hat_2..x_hat_{n-1}.
    const std::vector<std::vector<double>>& basis_perp() const { return perp_; }
    std::size_t perp_dim() const { return perp_.size(); }

    // Order in which the l_i enter the simple roots used for the eigenbasis:
    // alpha'_j = l_{sigma(j)} - l_{sigma(j+1)}, sigma = 1, 2, h, 3, h-1, ...
    const std::vector<int>& root_ordering() const { return ordering_; }

    // |(k_j)_par| = sqrt(2/h), the constant dropped from plane coordinates.
    double scale() const { return scale_; }

    // Metric projections (the frame is orthonormal).
    PlanePoint project_parallel(const LatticeVector& v) const;
    std::vector<double> project_perp(const LatticeVector& v) const;
    // project_parallel divided by scale(): k_j -> (cos 2 pi j/h, sin 2 pi j/h).
    PlanePoint plane_point(const LatticeVector& v) const;

    // Same maps on integer k-coordinates (length n+1, any representative).
    PlanePoint project_parallel(std::span<const std::int64_t> k) const;
    PlanePoint plane_point(std::span<const std::int64_t> k) const;
    void project_perp(std::span<const std::int64_t> k, std::span<double> out) const;

    // Images of k_1..k_{n+1}.
    const std::vector<PlanePoint>& k_parallel() const { return k_par_; }
    const std::vector<std::vector<double>>& k_perp() const { return k_perp_; }

private:
    std::vector<double> l_coords(const LatticeVector& v) const;

    LatticeRank rank_;
    Eigensystem eigen_;
    std::vector<int> ordering_;
    std::vector<std::vector<double>> eigen_frame_;
    std::array<std::vector<double>, 2> parallel_;
    std::vector<std::vector<double>> perp_;
    double scale_ = 0.0;
    std::vector<PlanePoint> k_par_;
    std::vector<std::vector<double>> k_perp_;
};

// Matrix of the Coxeter element in frame coordinates: rows and columns are
// ordered (e_x, e_y, perp_1, ..., perp_{n-2}).
Matrix<double> coxeter_matrix_in_frame(const CoxeterFrame& frame);

// Angle by which the Coxeter element turns the pair (x_hat_m, x_hat_{h-m}),
// m = 1..floor(n/2); m = 1 is E_par. Pairs that are not rotation blocks
// report NaN.
std::vector<double> coxeter_block_angles(const CoxeterFrame& frame, double tol = 1e-9);

// True iff the Coxeter element preserves E_par and acts on it as the
// rotation by 2 pi / h, to within tol.
bool coxeter_rotation_check(const CoxeterFrame& frame, double tol = 1e-9);

}  // namespace coxtile
