#include "coxtile/coxeter_projection.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace coxtile;

namespace {

constexpr double pi = std::numbers::pi;

LatticeVector k_vec(LatticeRank rank, int i) {
    std::vector<std::int64_t> c(rank.h(), 0);
    c[i - 1] = 1;
    return LatticeVector::from_k(rank, c);
}

double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return s;
}

double wrap_angle(double a) {
    while (a > pi) a -= 2 * pi;
    while (a <= -pi) a += 2 * pi;
    return a;
}

}  // namespace

TEST_CASE("no plane for A_1") {
    CHECK_THROWS_AS(cartan_eigensystem(LatticeRank(1)), std::invalid_argument);
    CHECK_THROWS_AS(CoxeterFrame(LatticeRank(1)), std::invalid_argument);
}

TEST_CASE("A_2 eigenvalues") {
    // det [[2-x, -1], [-1, 2-x]] = (x-1)(x-3)
    const auto e = cartan_eigensystem(LatticeRank(2));
    REQUIRE(e.eigenvalues.size() == 2);
    CHECK(e.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("closed-form eigensystem") {
    for (int n = 2; n <= 11; ++n) {
        const LatticeRank rank(n);
        const int h = rank.h();
        const auto e = cartan_eigensystem(rank);
        const auto c = cartan_matrix(rank);
        for (int i = 1; i <= n; ++i) {
            CHECK(e.exponents[i - 1] == i);
            CHECK(std::abs(e.eigenvalues[i - 1] - 2 * (1 + std::cos(i * pi / h))) < 1e-12);
            for (int j = 1; j <= n; ++j)
                CHECK(std::abs(e.eigenvectors(j - 1, i - 1) - (j % 2 ? 1 : -1) * std::sin(j * i * pi / h)) < 1e-14);
        }
        // Residual computed here from the integer Cartan matrix.
        double worst = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double cx = 0;
                for (int l = 0; l < n; ++l) cx += c(j, l) * e.eigenvectors(l, i);
                worst = std::max(worst, std::abs(cx - e.eigenvalues[i] * e.eigenvectors(j, i)));
            }
        CHECK(worst < 1e-10);
        CHECK(eigen_residual(rank, e) < 1e-10);
    }
}

TEST_CASE("frame is orthonormal") {
    for (int n = 2; n <= 11; ++n) {
        const CoxeterFrame f{LatticeRank(n)};
        std::vector<std::vector<double>> all{f.basis_parallel()[0], f.basis_parallel()[1]};
        for (const auto& v : f.basis_perp()) all.push_back(v);
        CHECK(all.size() == static_cast<std::size_t>(n));
        CHECK(f.perp_dim() == static_cast<std::size_t>(n - 2));
        for (std::size_t a = 0; a < all.size(); ++a) {
            double sum = 0;
            for (double x : all[a]) sum += x;
            CHECK(std::abs(sum) < 1e-12);  // inside the hyperplane orthogonal to l_0
            for (std::size_t b = 0; b < all.size(); ++b) {
                double dot = 0;
                for (std::size_t t = 0; t < all[a].size(); ++t) dot += all[a][t] * all[b][t];
                CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-12);
            }
        }
        for (std::size_t a = 0; a < f.eigen_frame().size(); ++a)
            for (std::size_t b = 0; b < f.eigen_frame().size(); ++b) {
                double dot = 0;
                for (std::size_t t = 0; t < f.eigen_frame()[a].size(); ++t)
                    dot += f.eigen_frame()[a][t] * f.eigen_frame()[b][t];
                CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-12);
            }
    }
}

TEST_CASE("orientation convention") {
    for (int n = 2; n <= 11; ++n) {
        const LatticeRank rank(n);
        const CoxeterFrame f{rank};
        const int h = rank.h();
        CHECK(std::abs(f.scale() - std::sqrt(2.0 / h)) < 1e-14);
        for (int j = 1; j <= h; ++j) {
            const PlanePoint p = f.plane_point(k_vec(rank, j));
            CHECK(std::abs(p.x - std::cos(2 * pi * j / h)) < 1e-12);
            CHECK(std::abs(p.y - std::sin(2 * pi * j / h)) < 1e-12);
            const PlanePoint q = f.project_parallel(k_vec(rank, j));
            CHECK(std::abs(q.norm() - f.scale()) < 1e-12);
        }
    }
}

TEST_CASE("A_3 images match the reference square up to an orthogonal map") {
    const LatticeRank rank(3);
    const CoxeterFrame f{rank};
    const PlanePoint reference[4] = {{0, 1}, {-1, 0}, {0, -1}, {1, 0}};
    PlanePoint ours[4];
    for (int j = 0; j < 4; ++j) ours[j] = f.plane_point(k_vec(rank, j + 1));
    // Solve Q ours[0] = pub[0], Q ours[1] = pub[1], then check Q on the rest.
    const double det = ours[0].cross(ours[1]);
    REQUIRE(std::abs(det) > 0.5);
    const double q00 = (reference[0].x * ours[1].y - reference[1].x * ours[0].y) / det;
    const double q01 = (reference[1].x * ours[0].x - reference[0].x * ours[1].x) / det;
    const double q10 = (reference[0].y * ours[1].y - reference[1].y * ours[0].y) / det;
    const double q11 = (reference[1].y * ours[0].x - reference[0].y * ours[1].x) / det;
    CHECK(std::abs(q00 * q00 + q10 * q10 - 1) < 1e-9);
    CHECK(std::abs(q01 * q01 + q11 * q11 - 1) < 1e-9);
    CHECK(std::abs(q00 * q01 + q10 * q11) < 1e-9);
    for (int j = 0; j < 4; ++j) {
        CHECK(std::abs(q00 * ours[j].x + q01 * ours[j].y - reference[j].x) < 1e-9);
        CHECK(std::abs(q10 * ours[j].x + q11 * ours[j].y - reference[j].y) < 1e-9);
    }
    // k_1 + k_3 is perpendicular to the plane, with |k_1 + k_3|^2 = 2(3/4) - 2(1/4) = 1.
    const auto d = k_vec(rank, 1) + k_vec(rank, 3);
    CHECK(f.project_parallel(d).norm() < 1e-12);
    CHECK(std::abs(std::sqrt(norm2(f.project_perp(d))) - 1.0) < 1e-12);
    CHECK(f.perp_dim() == 1);
}

TEST_CASE("sum of k's projects to zero") {
    for (int n = 2; n <= 11; ++n) {
        const CoxeterFrame f{LatticeRank(n)};
        PlanePoint s;
        for (const auto& p : f.k_parallel()) s = s + p;
        CHECK(s.norm() < 1e-12);
    }
}

TEST_CASE("pythagoras and linearity") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int n = 2; n <= 11; ++n) {
        const LatticeRank rank(n);
        const CoxeterFrame f{rank};
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::int64_t> a(rank.h()), b(rank.h());
            for (auto& x : a) x = d(rng);
            for (auto& x : b) x = d(rng);
            const auto va = LatticeVector::from_k(rank, a);
            const auto vb = LatticeVector::from_k(rank, b);
            const double exact = to_double(inner_product(va, va));
            const PlanePoint p = f.project_parallel(va);
            CHECK(std::abs(p.dot(p) + norm2(f.project_perp(va)) - exact) < 1e-10 * std::max(1.0, exact));
            const PlanePoint sum = f.project_parallel(va + vb);
            const PlanePoint parts = f.project_parallel(va) + f.project_parallel(vb);
            CHECK((sum - parts).norm() < 1e-12 * std::max(1.0, sum.norm()));
            const auto ps = f.project_perp(va + vb);
            const auto pa = f.project_perp(va);
            const auto pb = f.project_perp(vb);
            for (std::size_t t = 0; t < ps.size(); ++t) CHECK(std::abs(ps[t] - pa[t] - pb[t]) < 1e-11);
            // Integer-coordinate overloads agree with the LatticeVector path.
            const PlanePoint pi_ = f.project_parallel(std::span<const std::int64_t>(a));
            CHECK((pi_ - p).norm() < 1e-12);
            std::vector<double> perp(f.perp_dim());
            f.project_perp(std::span<const std::int64_t>(a), perp);
            for (std::size_t t = 0; t < perp.size(); ++t) CHECK(std::abs(perp[t] - pa[t]) < 1e-12);
        }
    }
}

TEST_CASE("A_2 has an empty perpendicular space") {
    const LatticeRank rank(2);
    const CoxeterFrame f{rank};
    CHECK(f.perp_dim() == 0);
    CHECK(f.project_perp(k_vec(rank, 1)).empty());
}

TEST_CASE("A_4 perpendicular images form a pentagram") {
    const LatticeRank rank(4);
    const CoxeterFrame f{rank};
    for (int j = 0; j < 5; ++j) {
        const auto& a = f.k_perp()[j];
        const auto& b = f.k_perp()[(j + 1) % 5];
        const double turn = wrap_angle(std::atan2(b[1], b[0]) - std::atan2(a[1], a[0]));
        CHECK(std::abs(std::abs(turn) - 4 * pi / 5) < 1e-9);
    }
}

TEST_CASE("projected gram matrix is a cosine table") {
    for (int n = 2; n <= 11; ++n) {
        const CoxeterFrame f{LatticeRank(n)};
        const int h = n + 1;
        const auto& k = f.k_parallel();
        const double base = k[0].dot(k[0]);
        for (int j = 0; j < h; ++j)
            for (int l = 0; l < h; ++l)
                CHECK(std::abs(k[j].dot(k[l]) / base - std::cos(2 * pi * (j - l) / h)) < 1e-9);
    }
}

TEST_CASE("dihedral invariance of the k images") {
    for (int n = 2; n <= 11; ++n) {
        const CoxeterFrame f{LatticeRank(n)};
        const int h = n + 1;
        const double c = std::cos(2 * pi / h), s = std::sin(2 * pi / h);
        auto contains = [&](PlanePoint p) {
            for (const auto& q : f.k_parallel())
                if ((p - q).norm() < 1e-9) return true;
            return false;
        };
        for (const auto& p : f.k_parallel()) {
            CHECK(contains({c * p.x - s * p.y, s * p.x + c * p.y}));
            CHECK(contains({p.x, -p.y}));
        }
    }
}

TEST_CASE("coxeter element acts as a rotation") {
    for (int n = 2; n <= 11; ++n) {
        const CoxeterFrame f{LatticeRank(n)};
        CHECK(coxeter_rotation_check(f));
        const auto m = coxeter_matrix_in_frame(f);
        Matrix<double> p = Matrix<double>::identity(n);
        for (int t = 0; t < n + 1; ++t) p = p * m;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(std::abs(p(i, j) - (i == j ? 1.0 : 0.0)) < 1e-8);
        // Rotation by 2 pi / h on the (x, y) block, counter-clockwise.
        CHECK(std::abs(m(0, 0) - std::cos(2 * pi / (n + 1))) < 1e-9);
        CHECK(std::abs(m(1, 0) - std::sin(2 * pi / (n + 1))) < 1e-9);
    }
    const auto angles = coxeter_block_angles(CoxeterFrame{LatticeRank(4)});
    REQUIRE(angles.size() == 2);
    CHECK(std::abs(angles[0] - 2 * pi / 5) < 1e-9);
    CHECK(std::abs(angles[1] - 4 * pi / 5) < 1e-9);
}
