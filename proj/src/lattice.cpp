#include "hyperwall/lattice.hpp"

#include <algorithm>
#include <utility>

namespace hyperwall {

AmbientVector AmbientVector::basis(std::size_t index) {
    if (index >= kAmbientRank) throw ValidationError("ambient basis index out of range");
    AmbientVector v;
    v.coords[index] = 1;
    return v;
}

AmbientVector AmbientVector::from(std::span<const Integer> values) {
    if (values.size() != kAmbientRank)
        throw ValidationError("ambient vector needs 23 coordinates, got " + std::to_string(values.size()));
    AmbientVector v;
    std::copy(values.begin(), values.end(), v.coords.begin());
    return v;
}

bool AmbientVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Integer& c) { return c == 0; });
}

AmbientVector& AmbientVector::operator+=(const AmbientVector& o) {
    for (std::size_t i = 0; i < kAmbientRank; ++i) coords[i] += o.coords[i];
    return *this;
}

AmbientVector& AmbientVector::operator-=(const AmbientVector& o) {
    for (std::size_t i = 0; i < kAmbientRank; ++i) coords[i] -= o.coords[i];
    return *this;
}

AmbientVector& AmbientVector::operator*=(const Integer& s) {
    for (auto& c : coords) c *= s;
    return *this;
}

IntMatrix negative_e8() {
    IntMatrix m(8, 8);
    for (std::size_t i = 0; i < 8; ++i) m(i, i) = -2;
    // Bourbaki edges, 1-based: 1-3, 3-4, 4-5, 5-6, 6-7, 7-8, 2-4.
    constexpr std::pair<int, int> edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (auto [a, b] : edges) {
        m(a - 1, b - 1) = 1;
        m(b - 1, a - 1) = 1;
    }
    return m;
}

AmbientLattice make_k3_2_lattice() {
    AmbientLattice lat;
    lat.gram = IntMatrix(kAmbientRank, kAmbientRank);
    for (std::size_t u = 0; u < 3; ++u) {
        lat.gram(2 * u, 2 * u + 1) = 1;
        lat.gram(2 * u + 1, 2 * u) = 1;
    }
    const IntMatrix e8 = negative_e8();
    for (std::size_t offset : {basis_index::e8a, basis_index::e8b})
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) lat.gram(offset + i, offset + j) = e8(i, j);
    lat.gram(basis_index::delta, basis_index::delta) = -2;

    lat.basis_labels = {"e1", "f1", "e2", "f2", "e3", "f3"};
    for (const char* block : {"E8a_", "E8b_"})
        for (int i = 1; i <= 8; ++i) lat.basis_labels.push_back(block + std::to_string(i));
    lat.basis_labels.emplace_back("delta");
    return lat;
}

const AmbientLattice& k3_2_lattice() {
    static const AmbientLattice lattice = make_k3_2_lattice();
    return lattice;
}

std::array<Integer, kAmbientRank> pairing_row(const AmbientVector& v) {
    const IntMatrix& g = k3_2_lattice().gram;
    std::array<Integer, kAmbientRank> row{};
    for (std::size_t j = 0; j < kAmbientRank; ++j)
        for (std::size_t i = 0; i < kAmbientRank; ++i)
            if (g(i, j) != 0 && v[i] != 0) row[j] += v[i] * g(i, j);
    return row;
}

Integer bb_pair(const AmbientVector& a, const AmbientVector& b) {
    const auto row = pairing_row(a);
    Integer s = 0;
    for (std::size_t j = 0; j < kAmbientRank; ++j) s += row[j] * b[j];
    return s;
}

Integer bb_pair(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.size() != kAmbientRank || b.size() != kAmbientRank)
        throw ValidationError("bb_pair: vectors must have 23 coordinates");
    return bb_pair(AmbientVector::from(a), AmbientVector::from(b));
}

Integer content(std::span<const Integer> coords) {
    Integer g = 0;
    for (const auto& c : coords) g = gcd(g, c);
    return g;
}

Integer divisibility(const AmbientVector& v) {
    if (v.is_zero()) throw PreconditionError("divisibility of the zero vector");
    const auto row = pairing_row(v);
    return content(row);
}

Rational CurveClass::square() const {
    return ratio(bb_pair(numerator, numerator), denominator * denominator);
}

Rational CurveClass::dot(const AmbientVector& v) const {
    return ratio(bb_pair(numerator, v), denominator);
}

CurveClass dual_class(const AmbientVector& rho) {
    const Integer div = divisibility(rho);
    // Non-primitive input can carry larger divisibility; only the 2-part
    // matters for the discriminant group Z/2.
    return CurveClass{rho, div % 2 == 0 ? Integer(2) : Integer(1)};
}

bool admissible_square_div(const Integer& square, const Integer& div) {
    if (div != 1 && div != 2) throw ValidationError("divisibility must be 1 or 2");
    if (div == 2) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), Integer(square + 2).get_mpz_t(), 8);
        return r == 0;
    }
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), square.get_mpz_t(), 2);
    return r == 0;
}

Inertia signature_of(const RatMatrix& gram) {
    if (!gram.is_symmetric()) throw ValidationError("signature_of: matrix is not symmetric");
    RatMatrix a = gram;
    const std::size_t n = a.rows();
    Inertia out;

    auto swap_index = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n && pivot == n; ++i)
            if (a(i, i) != 0) pivot = i;
        if (pivot == n) {
            // Zero diagonal: a nonzero off-diagonal a_ij lets the congruence
            // e_i -> e_i + e_j produce the diagonal entry 2 a_ij.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                out.zero += n - k;
                return out;
            }
            for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
            for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
            pivot = pi;
        }
        swap_index(k, pivot);
        const Rational d = a(k, k);
        (d > 0 ? out.positive : out.negative) += 1;
        // Schur complement; row and column k are read before being cleared.
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rational f = a(i, k) / d;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
        for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
    }
    return out;
}

Inertia signature_of(const IntMatrix& gram) { return signature_of(to_rational(gram)); }

Rational determinant(const RatMatrix& m) {
    if (!m.is_square()) throw ValidationError("determinant of a non-square matrix");
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

Integer determinant(const IntMatrix& m) {
    const Rational d = determinant(to_rational(m));
    return d.get_num();
}

std::optional<std::vector<Rational>> solve_linear(RatMatrix a, std::vector<Rational> rhs) {
    const std::size_t n = a.rows();
    if (!a.is_square() || rhs.size() != n) throw ValidationError("solve_linear: shape mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            std::swap(rhs[p], rhs[k]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            const Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] /= a(i, i);
    return rhs;
}

std::size_t rank_of(RatMatrix a) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t p = rank;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(rank, j));
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            if (a(i, col) == 0) continue;
            const Rational f = a(i, col) / a(rank, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

PicardLattice::PicardLattice(std::vector<AmbientVector> basis) : basis_(std::move(basis)) {
    const std::size_t r = basis_.size();
    if (r == 0) throw ValidationError("Picard basis is empty");
    if (r > kAmbientRank) throw ValidationError("Picard basis has more than 23 vectors");

    RatMatrix coords(r, kAmbientRank);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < kAmbientRank; ++j) coords(i, j) = Rational(basis_[i][j]);
    if (rank_of(coords) != r) throw ValidationError("Picard basis vectors are linearly dependent");

    ambient_pairings_ = IntMatrix(r, kAmbientRank);
    for (std::size_t i = 0; i < r; ++i) {
        const auto row = pairing_row(basis_[i]);
        for (std::size_t j = 0; j < kAmbientRank; ++j) ambient_pairings_(i, j) = row[j];
    }
    gram_ = IntMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Integer s = 0;
            for (std::size_t k = 0; k < kAmbientRank; ++k) s += ambient_pairings_(i, k) * basis_[j][k];
            gram_(i, j) = s;
        }
}

AmbientVector PicardLattice::to_ambient(std::span<const Integer> coords) const {
    if (coords.size() != rank())
        throw ValidationError("Picard coordinates: expected " + std::to_string(rank()) + " entries, got " +
                              std::to_string(coords.size()));
    AmbientVector v;
    for (std::size_t i = 0; i < rank(); ++i)
        if (coords[i] != 0) v += coords[i] * basis_[i];
    return v;
}

std::optional<std::vector<Integer>> PicardLattice::coordinates_of(const AmbientVector& v) const {
    // Normal equations B B^T x = B v have a unique solution since B has full row rank.
    const std::size_t r = rank();
    RatMatrix bbt(r, r);
    std::vector<Rational> rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            Integer s = 0;
            for (std::size_t k = 0; k < kAmbientRank; ++k) s += basis_[i][k] * basis_[j][k];
            bbt(i, j) = Rational(s);
        }
        Integer s = 0;
        for (std::size_t k = 0; k < kAmbientRank; ++k) s += basis_[i][k] * v[k];
        rhs[i] = Rational(s);
    }
    auto x = solve_linear(std::move(bbt), std::move(rhs));
    if (!x) return std::nullopt;
    std::vector<Integer> out;
    out.reserve(r);
    for (const auto& q : *x) {
        if (q.get_den() != 1) return std::nullopt;
        out.push_back(q.get_num());
    }
    if (to_ambient(out) != v) return std::nullopt;
    return out;
}

Integer PicardLattice::pair(std::span<const Integer> x, std::span<const Integer> y) const {
    const auto gx = gram_times(x);
    if (y.size() != rank()) throw ValidationError("Picard coordinates have the wrong length");
    Integer s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += gx[i] * y[i];
    return s;
}

std::vector<Integer> PicardLattice::gram_times(std::span<const Integer> x) const {
    if (x.size() != rank()) throw ValidationError("Picard coordinates have the wrong length");
    std::vector<Integer> out(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) out[i] += gram_(i, j) * x[j];
    return out;
}

Integer PicardLattice::divisibility_of(std::span<const Integer> coords) const {
    if (coords.size() != rank()) throw ValidationError("Picard coordinates have the wrong length");
    Integer g = 0;
    for (std::size_t j = 0; j < kAmbientRank; ++j) {
        Integer s = 0;
        for (std::size_t i = 0; i < rank(); ++i) s += coords[i] * ambient_pairings_(i, j);
        g = gcd(g, s);
        if (g == 1) break;
    }
    if (g == 0) throw PreconditionError("divisibility of the zero vector");
    return g;
}

void PicardLattice::require_hyperbolic() const {
    const Inertia s = signature_of(gram_);
    if (s.positive != 1 || s.zero != 0)
        throw PreconditionError("Picard lattice must have signature (1, " + std::to_string(rank() - 1) +
                                "), got (" + std::to_string(s.positive) + ", " + std::to_string(s.negative) +
                                ", zero " + std::to_string(s.zero) + ")");
}

}  // namespace hyperwall
