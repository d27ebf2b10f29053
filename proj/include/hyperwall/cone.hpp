#pragma once

#include "hyperwall/enumeration.hpp"

#include <string_view>
#include <vector>

namespace hyperwall {

enum class AmpleStatus { ample, nef_boundary, not_nef, not_positive };

std::string_view to_string(AmpleStatus s);

/// Numerical ampleness verdict for a divisor M against the wall classes.
///
/// `ample` means M is positive on every predicted extremal curve class. That
/// M is then ample is a theorem; the converse (every ample class passes) is
/// conjectural, so a failing verdict is a prediction.
struct AmpleVerdict {
    AmpleStatus status = AmpleStatus::not_positive;
    /// Walls with (rho, g) > 0 and (rho, M) <= 0.
    std::vector<WallClass> witnesses;
    /// (M, M) = 0 and status != not_nef.
    bool isotropic_flag = false;
};

/// Requires g to be a polarization (see require_polarization).
AmpleVerdict is_ample(const PicardLattice& picard, const PicardVector& g, const PicardVector& m, unsigned threads = 1);

struct NefThreshold {
    /// sup { t : t M + (1 - t) g is ample }, in (0, 1].
    Rational tau;
    /// Walls crossed at t = tau; for tau = 1 these are the walls with (rho, M) = 0.
    std::vector<WallClass> walls;
};

/// Requires is_ample(g) = ample, (M, M) > 0 and (M, g) > 0.
NefThreshold nef_threshold(const PicardLattice& picard, const PicardVector& g, const PicardVector& m,
                           unsigned threads = 1);

enum class RayKind { divisorial_half, divisorial_two, lagrangian_plane, non_nodal, inadmissible };

std::string_view to_string(RayKind k);

struct RayType {
    RayKind kind = RayKind::non_nodal;
    Integer square;
    Integer div;
    /// (R, R) for the dual class R = rho / div.
    Rational dual_square;
    /// Possible D.C values for divisorial kinds: {-1, -2} for the half kind,
    /// since the lattice data cannot separate the two; {-2} for the other.
    std::vector<int> dc_values;
};

/// Classification by (square, divisibility) alone. Pairs that no vector of
/// the lattice can realize, such as (-4, 2), come back as inadmissible.
RayType classify_square_div(const Integer& square, const Integer& div);

/// classify_square_div applied to the square and divisibility of rho.
/// Throws PreconditionError for zero or nonnegative-square input.
RayType classify_wall(const AmbientVector& rho);

/// (M, M) = 0 and M primitive in the Picard lattice.
bool detect_isotropic_boundary(const PicardLattice& picard, const PicardVector& m);

}  // namespace hyperwall
