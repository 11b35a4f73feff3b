#pragma once

// Exact model of the A_n root lattice, its weight lattice and the bases
// used to write their vectors.
//
//   k-basis      k_1..k_{n+1}, equal length, k_1 + ... + k_{n+1} = 0
//   alpha-basis  simple roots alpha_i = k_i - k_{i+1}
//   omega-basis  fundamental weights omega_i = k_1 + ... + k_i
//   l-basis      orthonormal l_1..l_{n+1}; k_i = l_i - l_0/(n+1)
//
// k- and l-coordinates have n+1 entries, alpha- and omega-coordinates n.
// A k-coordinate tuple is stored in canonical form (last entry 0), which is
// legal because adding a multiple of (1,...,1) leaves the vector unchanged.
// l-coordinates of a lattice vector always sum to zero; components along
// l_0 live in cubic_descent.hpp.

#include "coxtile/matrix.hpp"
#include "coxtile/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coxtile {

class LatticeRank {
public:
    explicit LatticeRank(int n);

    int n() const { return n_; }
    // Coxeter number.
    int h() const { return n_ + 1; }

    friend bool operator==(LatticeRank a, LatticeRank b) { return a.n_ == b.n_; }

private:
    int n_;
};

enum class Basis { k, alpha, omega, l };

const char* basis_name(Basis b);

class LatticeVector {
public:
    // Throws std::invalid_argument on a length mismatch, or when l-basis
    // coordinates do not sum to zero.
    LatticeVector(LatticeRank rank, Basis basis, std::vector<Rational> coords);

    static LatticeVector zero(LatticeRank rank);
    static LatticeVector from_k(LatticeRank rank, const std::vector<std::int64_t>& coords);

    LatticeRank rank() const { return rank_; }
    Basis basis() const { return basis_; }
    const std::vector<Rational>& coords() const { return coords_; }

    LatticeVector to(Basis target) const;

    // Canonical k-coordinates (length n+1, last entry zero).
    std::vector<Rational> k_coords() const;
    // Throws std::domain_error if the vector is not in the weight lattice.
    std::vector<std::int64_t> integral_k_coords() const;

    bool in_weight_lattice() const;
    bool in_root_lattice() const;

    LatticeVector operator+(const LatticeVector& o) const;
    LatticeVector operator-(const LatticeVector& o) const;
    LatticeVector operator-() const;
    LatticeVector operator*(const Rational& s) const;

    // Compares the geometric vectors, whatever the stored bases.
    friend bool operator==(const LatticeVector& a, const LatticeVector& b);
    friend bool operator<(const LatticeVector& a, const LatticeVector& b);

    std::string to_string() const;

private:
    LatticeRank rank_;
    Basis basis_;
    std::vector<Rational> coords_;
};

struct GramData {
    Matrix<std::int64_t> cartan;
    Matrix<Rational> cartan_inverse;
    Matrix<Rational> k_gram;
};

Matrix<std::int64_t> cartan_matrix(LatticeRank rank);
GramData gram_data(LatticeRank rank);

// omega_i = sum_j (C^-1)_ij alpha_j, returned in the alpha basis.
std::vector<LatticeVector> fundamental_weights(LatticeRank rank);
std::vector<LatticeVector> simple_roots(LatticeRank rank);
std::vector<LatticeVector> k_vectors(LatticeRank rank);

Rational inner_product(const LatticeVector& a, const LatticeVector& b);

// r_i for 1 <= i <= n. On k-coordinates this swaps entries i and i+1.
LatticeVector simple_reflection(int i, const LatticeVector& v);

// Coxeter element R = r_1 r_2 ... r_n: k_j -> k_{j+1}, k_{n+1} -> k_1.
LatticeVector coxeter_action(const LatticeVector& v);

}  // namespace coxtile
