#pragma once

#include "hyperwall/lattice.hpp"

#include <optional>
#include <vector>

namespace hyperwall {

using PicardVector = std::vector<Integer>;

/// A (square, divisibility) pair selecting one family of wall classes.
struct WallTarget {
    Integer square;
    Integer div;

    friend bool operator==(const WallTarget&, const WallTarget&) = default;
};

/// (-2, 1), (-2, 2), (-10, 2).
std::vector<WallTarget> default_targets();

struct WallQuery {
    const PicardLattice* picard = nullptr;
    PicardVector g;
    std::optional<PicardVector> m;
    std::vector<WallTarget> targets = default_targets();
    /// Upper bound on (rho, g), applied on top of the bound derived from m.
    std::optional<Integer> level_cap;
    /// Keep only (rho, m) < 0 instead of (rho, m) <= 0. This is what makes an
    /// isotropic m admissible without a level cap.
    bool strict = false;
    /// Worker threads for independent levels; 0 or 1 runs inline.
    unsigned threads = 1;
};

struct WallClass {
    AmbientVector rho_ambient;
    PicardVector rho_picard;
    Integer square;
    Integer div;

    friend bool operator==(const WallClass&, const WallClass&) = default;
};

/// Largest level (rho, g) that can carry a wall of the given square under the
/// query's m-constraint and level cap. Throws PreconditionError when the set
/// is unbounded (no m, no cap; or isotropic m without strictness or cap).
Integer max_level(const WallQuery& q, const Integer& square);

/// All rho in the Picard lattice with (rho, g) = level and (rho, rho) = square.
/// level may be 0 (used to test a polarization). Results are in lexicographic
/// order. Throws PreconditionError when g^perp is not negative definite.
std::vector<PicardVector> slice_solutions(const PicardLattice& picard, const PicardVector& g, const Integer& level,
                                          const Integer& square);

/// Every wall class of the query: square and divisibility among the targets,
/// (rho, g) > 0, and (rho, m) <= 0 (or < 0 when strict). Sorted by Picard
/// coordinates.
std::vector<WallClass> enumerate_walls(const WallQuery& q);

/// Exhaustive scan of [-box, box]^r with the same filter. Testing oracle;
/// uses machine integers and throws std::overflow_error if they would not suffice.
std::vector<WallClass> brute_force_walls(const WallQuery& q, long box);

/// Checks (g, g) > 0, signature (1, r-1) and that no target class is
/// orthogonal to g. Throws PreconditionError otherwise.
void require_polarization(const PicardLattice& picard, const PicardVector& g,
                          const std::vector<WallTarget>& targets = default_targets());

/// Validates the query's invariants; throws ValidationError / PreconditionError.
void validate_query(const WallQuery& q);

}  // namespace hyperwall
