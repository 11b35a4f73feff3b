#include "coxtile/root_lattice.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxtile {

std::int64_t determinant(const Matrix<std::int64_t>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    if (n == 0) return 1;
    Matrix<std::int64_t> a = m;
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

LatticeRank::LatticeRank(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("lattice rank must be >= 1, got " + std::to_string(n));
}

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::k: return "k";
        case Basis::alpha: return "alpha";
        case Basis::omega: return "omega";
        case Basis::l: return "l";
    }
    return "?";
}

namespace {

std::size_t expected_length(LatticeRank rank, Basis b) {
    return (b == Basis::k || b == Basis::l) ? static_cast<std::size_t>(rank.h())
                                            : static_cast<std::size_t>(rank.n());
}

Rational sum(const std::vector<Rational>& v) {
    return std::accumulate(v.begin(), v.end(), Rational{0});
}

void canonicalize_k(std::vector<Rational>& c) {
    const Rational last = c.back();
    if (last == Rational(0)) return;
    for (auto& x : c) x -= last;
}

std::vector<Rational> to_canonical_k(LatticeRank rank, Basis basis, const std::vector<Rational>& x) {
    const int n = rank.n();
    const int h = rank.h();
    std::vector<Rational> c(h);
    switch (basis) {
        case Basis::k:
        case Basis::l:
            c = x;
            break;
        case Basis::alpha:
            c[0] = x[0];
            for (int j = 1; j < n; ++j) c[j] = x[j] - x[j - 1];
            c[n] = -x[n - 1];
            break;
        case Basis::omega: {
            Rational acc = 0;
            for (int j = n - 1; j >= 0; --j) {
                acc += x[j];
                c[j] = acc;
            }
            c[n] = 0;
            break;
        }
    }
    canonicalize_k(c);
    return c;
}

std::vector<Rational> from_canonical_k(LatticeRank rank, Basis basis, const std::vector<Rational>& c) {
    const int n = rank.n();
    const int h = rank.h();
    switch (basis) {
        case Basis::k:
            return c;
        case Basis::l: {
            const Rational shift = sum(c) / Rational(h);
            std::vector<Rational> out(c);
            for (auto& x : out) x -= shift;
            return out;
        }
        case Basis::alpha: {
            const Rational shift = sum(c) / Rational(h);
            std::vector<Rational> out(n);
            Rational acc = 0;
            for (int i = 0; i < n; ++i) {
                acc += c[i] - shift;
                out[i] = acc;
            }
            return out;
        }
        case Basis::omega: {
            std::vector<Rational> out(n);
            for (int i = 0; i < n; ++i) out[i] = c[i] - c[i + 1];
            return out;
        }
    }
    return {};
}

}  // namespace

LatticeVector::LatticeVector(LatticeRank rank, Basis basis, std::vector<Rational> coords)
    : rank_(rank), basis_(basis), coords_(std::move(coords)) {
    if (coords_.size() != expected_length(rank, basis)) {
        std::ostringstream msg;
        msg << basis_name(basis) << "-basis vector for A_" << rank.n() << " needs "
            << expected_length(rank, basis) << " coordinates, got " << coords_.size();
        throw std::invalid_argument(msg.str());
    }
    if (basis == Basis::l && sum(coords_) != Rational(0))
        throw std::invalid_argument("l-basis coordinates of a lattice vector must sum to zero");
    if (basis == Basis::k) canonicalize_k(coords_);
}

LatticeVector LatticeVector::zero(LatticeRank rank) {
    return LatticeVector(rank, Basis::k, std::vector<Rational>(rank.h()));
}

LatticeVector LatticeVector::from_k(LatticeRank rank, const std::vector<std::int64_t>& coords) {
    std::vector<Rational> c(coords.begin(), coords.end());
    return LatticeVector(rank, Basis::k, std::move(c));
}

LatticeVector LatticeVector::to(Basis target) const {
    if (target == basis_) return *this;
    return LatticeVector(rank_, target, from_canonical_k(rank_, target, k_coords()));
}

std::vector<Rational> LatticeVector::k_coords() const {
    if (basis_ == Basis::k) return coords_;
    return to_canonical_k(rank_, basis_, coords_);
}

std::vector<std::int64_t> LatticeVector::integral_k_coords() const {
    std::vector<std::int64_t> out;
    for (const auto& c : k_coords()) {
        if (c.denominator() != 1) throw std::domain_error("vector is not in the weight lattice: " + to_string());
        out.push_back(c.numerator());
    }
    return out;
}

bool LatticeVector::in_weight_lattice() const {
    for (const auto& c : k_coords())
        if (c.denominator() != 1) return false;
    return true;
}

bool LatticeVector::in_root_lattice() const {
    if (!in_weight_lattice()) return false;
    return sum(k_coords()).numerator() % rank_.h() == 0;
}

namespace {
void require_same_rank(const LatticeVector& a, const LatticeVector& b) {
    if (!(a.rank() == b.rank()))
        throw std::invalid_argument("rank mismatch: A_" + std::to_string(a.rank().n()) + " vs A_" +
                                    std::to_string(b.rank().n()));
}
}  // namespace

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
    require_same_rank(*this, o);
    auto a = k_coords();
    const auto b = o.k_coords();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return LatticeVector(rank_, Basis::k, std::move(a)).to(basis_);
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const { return *this + (-o); }

LatticeVector LatticeVector::operator-() const {
    auto c = coords_;
    for (auto& x : c) x = -x;
    return LatticeVector(rank_, basis_, std::move(c));
}

LatticeVector LatticeVector::operator*(const Rational& s) const {
    auto c = coords_;
    for (auto& x : c) x *= s;
    return LatticeVector(rank_, basis_, std::move(c));
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.rank_ == b.rank_ && a.k_coords() == b.k_coords();
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
    require_same_rank(a, b);
    return a.k_coords() < b.k_coords();
}

std::string LatticeVector::to_string() const {
    std::ostringstream out;
    out << basis_name(basis_) << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) out << (i ? ", " : "") << coxtile::to_string(coords_[i]);
    out << ")";
    return out.str();
}

Matrix<std::int64_t> cartan_matrix(LatticeRank rank) {
    const auto n = static_cast<std::size_t>(rank.n());
    Matrix<std::int64_t> c(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        c(i, i) = 2;
        if (i + 1 < n) c(i, i + 1) = c(i + 1, i) = -1;
    }
    return c;
}

GramData gram_data(LatticeRank rank) {
    GramData g;
    g.cartan = cartan_matrix(rank);
    const auto n = static_cast<std::size_t>(rank.n());
    Matrix<Rational> c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = g.cartan(i, j);
    auto inv = exact_inverse(c);
    if (!inv) throw std::logic_error("Cartan matrix is singular");
    g.cartan_inverse = std::move(*inv);
    const auto h = static_cast<std::size_t>(rank.h());
    g.k_gram = Matrix<Rational>(h, h, Rational(-1, rank.h()));
    for (std::size_t i = 0; i < h; ++i) g.k_gram(i, i) = Rational(rank.n(), rank.h());
    return g;
}

std::vector<LatticeVector> fundamental_weights(LatticeRank rank) {
    const GramData g = gram_data(rank);
    std::vector<LatticeVector> out;
    for (int i = 0; i < rank.n(); ++i) {
        std::vector<Rational> row(g.cartan_inverse.row(i), g.cartan_inverse.row(i) + rank.n());
        out.emplace_back(rank, Basis::alpha, std::move(row));
    }
    return out;
}

std::vector<LatticeVector> simple_roots(LatticeRank rank) {
    std::vector<LatticeVector> out;
    for (int i = 0; i < rank.n(); ++i) {
        std::vector<Rational> b(rank.n());
        b[i] = 1;
        out.emplace_back(rank, Basis::alpha, std::move(b));
    }
    return out;
}

std::vector<LatticeVector> k_vectors(LatticeRank rank) {
    std::vector<LatticeVector> out;
    for (int i = 0; i < rank.h(); ++i) {
        std::vector<Rational> c(rank.h());
        c[i] = 1;
        out.emplace_back(rank, Basis::k, std::move(c));
    }
    return out;
}

Rational inner_product(const LatticeVector& a, const LatticeVector& b) {
    require_same_rank(a, b);
    const auto x = a.k_coords();
    const auto y = b.k_coords();
    Rational dot = 0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * y[i];
    return dot - sum(x) * sum(y) / Rational(a.rank().h());
}

LatticeVector simple_reflection(int i, const LatticeVector& v) {
    if (i < 1 || i > v.rank().n())
        throw std::out_of_range("simple reflection index " + std::to_string(i) + " outside 1.." +
                                std::to_string(v.rank().n()));
    auto c = v.k_coords();
    std::swap(c[i - 1], c[i]);
    return LatticeVector(v.rank(), Basis::k, std::move(c)).to(v.basis());
}

LatticeVector coxeter_action(const LatticeVector& v) {
    const auto c = v.k_coords();
    std::vector<Rational> out(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) out[(j + 1) % c.size()] = c[j];
    return LatticeVector(v.rank(), Basis::k, std::move(out)).to(v.basis());
}

}  // namespace coxtile
