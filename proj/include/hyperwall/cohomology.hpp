#pragma once

#include "hyperwall/lattice.hpp"

#include <array>
#include <string>
#include <vector>

namespace hyperwall {

/// q^vee . a1 . a2 = 25 (a1, a2)
inline constexpr long kQdualPairing = 25;
/// q^vee . q^vee = 23 * 25
inline constexpr long kQdualSquare = 575;
/// alpha^4 = 3 (alpha, alpha)^2
inline constexpr long kFujikiConstant = 3;
/// c2(F) = (6/5) q^vee
inline const Rational kC2OverQdual{6, 5};

/// alpha1 alpha2 . alpha3 alpha4 in the middle cohomology.
Integer quad_product(const AmbientVector& a1, const AmbientVector& a2, const AmbientVector& a3,
                     const AmbientVector& a4);

/// An element  sum_ij tensor_ij b_i b_j + qdual_coeff * q^vee  of H^4(F, Q),
/// over a finite list of divisor classes b_i. q^vee stays a formal generator.
class MiddleClass {
public:
    /// Throws ValidationError if the tensor is not a symmetric n x n matrix.
    MiddleClass(std::vector<AmbientVector> basis, RatMatrix tensor, Rational qdual_coeff = 0);

    static MiddleClass qdual(std::vector<AmbientVector> basis, Rational coeff = 1);
    /// The symmetric tensor for b_i b_j.
    static MiddleClass product(std::vector<AmbientVector> basis, std::size_t i, std::size_t j, Rational coeff = 1);

    const std::vector<AmbientVector>& basis() const { return basis_; }
    const RatMatrix& tensor() const { return tensor_; }
    const Rational& qdual_coeff() const { return qdual_; }

    /// Same basis required; throws ValidationError otherwise.
    MiddleClass operator+(const MiddleClass& o) const;
    MiddleClass scaled(const Rational& s) const;

private:
    std::vector<AmbientVector> basis_;
    RatMatrix tensor_;
    Rational qdual_;
};

/// Bilinear intersection pairing on H^4. Throws ValidationError on basis mismatch.
Rational middle_pair(const MiddleClass& x, const MiddleClass& y);

/// c2(F) . alpha . beta = 30 (alpha, beta).
Rational c2_pair(const AmbientVector& a, const AmbientVector& b);

/// quad_product(a, a, a, a) == 3 (a, a)^2.
bool fujiki_check(const AmbientVector& a);

/// One rational solution (x, a, b) of the Lagrangian-plane system, where
/// x = (lambda, lambda) and [P^2] = a q^vee + b lambda^2.
struct PlaneSolution {
    Rational lambda_square;
    Rational a;
    Rational b;
    /// x is the square of a primitive class of divisibility 2.
    bool admissible = false;
};

struct LagrangianSystem {
    /// Primitive integer eliminant in x, highest degree first.
    std::vector<Integer> eliminant;
    /// One entry per rational root of the eliminant, ascending in x.
    std::vector<PlaneSolution> solutions;

    /// e.g. "23x^2+20x-2100=0"
    std::string eliminant_string() const;
};

/// Solves, over Q,
///   (i)   575 a^2 + 50 a b x + 3 b^2 x^2 = 3          ([P^2].[P^2] = 3)
///   (ii)  -3 = (6/5)(575 a + 25 b x)                   (c2(T_F)|P^2 = -3)
///   (iii) x^2 / 4 = 25 a x + 3 b x^2                   (lambda.lambda.[P^2])
/// by eliminating a and b from the two linear equations.
LagrangianSystem lagrangian_solver();

/// Left minus right side of (i), (ii), (iii) at a candidate solution.
std::array<Rational, 3> plane_equation_residuals(const Rational& x, const Rational& a, const Rational& b);

/// L = lambda / 2. Throws PreconditionError unless (lambda, lambda) = -10 and
/// lambda has divisibility 2.
CurveClass line_class_of_plane(const AmbientVector& lambda);

}  // namespace hyperwall
