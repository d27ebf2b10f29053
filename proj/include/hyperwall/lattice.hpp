#pragma once

#include "hyperwall/numeric.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperwall {

inline constexpr std::size_t kAmbientRank = 23;

/// Coordinates of a class in the fixed basis
/// e1,f1,e2,f2,e3,f3, E8a_1..8, E8b_1..8, delta.
struct AmbientVector {
    std::array<Integer, kAmbientRank> coords{};

    static AmbientVector basis(std::size_t index);
    /// Throws ValidationError unless exactly 23 entries are given.
    static AmbientVector from(std::span<const Integer> values);

    bool is_zero() const;

    Integer& operator[](std::size_t i) { return coords[i]; }
    const Integer& operator[](std::size_t i) const { return coords[i]; }

    AmbientVector& operator+=(const AmbientVector& o);
    AmbientVector& operator-=(const AmbientVector& o);
    AmbientVector& operator*=(const Integer& s);

    friend AmbientVector operator+(AmbientVector a, const AmbientVector& b) { return a += b; }
    friend AmbientVector operator-(AmbientVector a, const AmbientVector& b) { return a -= b; }
    friend AmbientVector operator*(const Integer& s, AmbientVector a) { return a *= s; }
    friend AmbientVector operator-(AmbientVector a) { return a *= Integer(-1); }
    friend bool operator==(const AmbientVector&, const AmbientVector&) = default;
};

/// Named basis indices.
namespace basis_index {
inline constexpr std::size_t e1 = 0, f1 = 1, e2 = 2, f2 = 3, e3 = 4, f3 = 5;
inline constexpr std::size_t e8a = 6;   // E8a_1 .. E8a_8 at 6..13
inline constexpr std::size_t e8b = 14;  // E8b_1 .. E8b_8 at 14..21
inline constexpr std::size_t delta = 22;
}  // namespace basis_index

/// The Beauville-Bogomolov lattice U^3 + (-E8)^2 + (-2) of K3^[2] type.
struct AmbientLattice {
    IntMatrix gram;
    std::vector<std::string> basis_labels;

    std::size_t rank() const { return gram.rows(); }
};

/// Negated Cartan matrix of E8, Bourbaki node numbering
/// (chain 1-3-4-5-6-7-8, node 2 attached to node 4).
IntMatrix negative_e8();

/// Shared immutable instance.
const AmbientLattice& k3_2_lattice();
AmbientLattice make_k3_2_lattice();

Integer bb_pair(const AmbientVector& a, const AmbientVector& b);
/// Same, for raw coordinate spans; throws ValidationError on length mismatch.
Integer bb_pair(std::span<const Integer> a, std::span<const Integer> b);

/// Row vector (v, b_i) over the 23 ambient basis vectors.
std::array<Integer, kAmbientRank> pairing_row(const AmbientVector& v);

/// Positive generator of (v, Lambda). Throws PreconditionError on v = 0.
Integer divisibility(const AmbientVector& v);

/// gcd of the coordinates; 0 for the zero vector.
Integer content(std::span<const Integer> coords);

/// An element of the dual lattice, numerator / denominator.
struct CurveClass {
    AmbientVector numerator;
    Integer denominator;  // 1 or 2

    Rational square() const;
    /// Pairing R.v = (numerator, v) / denominator.
    Rational dot(const AmbientVector& v) const;
};

/// R = rho / div, with the divisibility clamped to {1, 2} by parity.
CurveClass dual_class(const AmbientVector& rho);

/// Whether a primitive vector of the given square and divisibility exists in
/// the lattice. Throws ValidationError unless div is 1 or 2.
bool admissible_square_div(const Integer& square, const Integer& div);

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia by exact symmetric Gaussian elimination.
Inertia signature_of(const RatMatrix& gram);
Inertia signature_of(const IntMatrix& gram);

Rational determinant(const RatMatrix& m);
Integer determinant(const IntMatrix& m);

/// Exact solution of a nonsingular square system; nullopt when singular.
std::optional<std::vector<Rational>> solve_linear(RatMatrix a, std::vector<Rational> rhs);

/// Rank over the rationals.
std::size_t rank_of(RatMatrix m);

/// The Neron-Severi sublattice, given by ambient generators.
class PicardLattice {
public:
    /// Throws ValidationError if the basis is empty or dependent.
    explicit PicardLattice(std::vector<AmbientVector> basis);

    std::size_t rank() const { return basis_.size(); }
    const std::vector<AmbientVector>& basis() const { return basis_; }
    const IntMatrix& gram() const { return gram_; }

    /// Sum of x_i * basis_i. Throws ValidationError on length mismatch.
    AmbientVector to_ambient(std::span<const Integer> coords) const;
    /// Integral coordinates of v if it lies in the sublattice.
    std::optional<std::vector<Integer>> coordinates_of(const AmbientVector& v) const;

    Integer pair(std::span<const Integer> x, std::span<const Integer> y) const;
    /// G * x, i.e. the linear form (x, -) in coordinates.
    std::vector<Integer> gram_times(std::span<const Integer> x) const;
    /// Divisibility in the full ambient lattice of the class with these coordinates.
    Integer divisibility_of(std::span<const Integer> coords) const;

    /// Throws PreconditionError unless the form has signature (1, r-1).
    void require_hyperbolic() const;

private:
    std::vector<AmbientVector> basis_;
    IntMatrix gram_;
    // (basis_i, ambient b_j), r x 23.
    IntMatrix ambient_pairings_;
};

}  // namespace hyperwall
