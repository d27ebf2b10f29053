#include "hyperwall/cone.hpp"

#include <algorithm>

namespace hyperwall {

std::string_view to_string(AmpleStatus s) {
    switch (s) {
        case AmpleStatus::ample: return "ample";
        case AmpleStatus::nef_boundary: return "nef_boundary";
        case AmpleStatus::not_nef: return "not_nef";
        case AmpleStatus::not_positive: return "not_positive";
    }
    return "unknown";
}

std::string_view to_string(RayKind k) {
    switch (k) {
        case RayKind::divisorial_half: return "divisorial_half";
        case RayKind::divisorial_two: return "divisorial_two";
        case RayKind::lagrangian_plane: return "lagrangian_plane";
        case RayKind::non_nodal: return "non_nodal";
        case RayKind::inadmissible: return "inadmissible";
    }
    return "unknown";
}

AmpleVerdict is_ample(const PicardLattice& picard, const PicardVector& g, const PicardVector& m, unsigned threads) {
    if (m.size() != picard.rank()) throw ValidationError("M has the wrong number of coordinates");
    require_polarization(picard, g);

    AmpleVerdict verdict;
    const Integer mm = picard.pair(m, m);
    if (mm < 0 || picard.pair(m, g) <= 0) {
        verdict.status = AmpleStatus::not_positive;
        return verdict;
    }

    WallQuery q;
    q.picard = &picard;
    q.g = g;
    q.m = m;
    q.threads = threads;
    // Isotropic M: walls with (rho, M) = 0 form infinite families, so only the
    // strictly negative ones are collected.
    q.strict = (mm == 0);
    verdict.witnesses = enumerate_walls(q);

    const bool crosses = std::any_of(verdict.witnesses.begin(), verdict.witnesses.end(),
                                     [&](const WallClass& w) { return picard.pair(w.rho_picard, m) < 0; });
    if (crosses) {
        verdict.status = AmpleStatus::not_nef;
    } else if (mm == 0 || !verdict.witnesses.empty()) {
        verdict.status = AmpleStatus::nef_boundary;
    } else {
        verdict.status = AmpleStatus::ample;
    }
    verdict.isotropic_flag = (mm == 0 && verdict.status != AmpleStatus::not_nef);
    return verdict;
}

NefThreshold nef_threshold(const PicardLattice& picard, const PicardVector& g, const PicardVector& m, unsigned threads) {
    if (m.size() != picard.rank()) throw ValidationError("M has the wrong number of coordinates");
    require_polarization(picard, g);
    if (picard.pair(m, m) <= 0) throw PreconditionError("nef threshold needs (M, M) > 0");
    if (picard.pair(m, g) <= 0) throw PreconditionError("nef threshold needs (M, g) > 0");

    WallQuery q;
    q.picard = &picard;
    q.g = g;
    q.m = m;
    q.threads = threads;
    const auto walls = enumerate_walls(q);

    NefThreshold out{Rational(1), {}};
    for (const auto& w : walls) {
        const Integer at_g = picard.pair(w.rho_picard, g);
        const Integer at_m = picard.pair(w.rho_picard, m);
        // (t M + (1 - t) g, rho) = 0 at t = (g, rho) / ((g, rho) - (M, rho)).
        const Rational t = ratio(at_g, at_g - at_m);
        if (t < out.tau) {
            out.tau = t;
            out.walls.clear();
        }
        if (t == out.tau) out.walls.push_back(w);
    }
    return out;
}

RayType classify_square_div(const Integer& square, const Integer& div) {
    if (square >= 0) throw PreconditionError("wall classification needs a negative square");
    if (div <= 0) throw ValidationError("divisibility must be positive");
    RayType out;
    out.square = square;
    out.div = div;
    const Integer den = (div % 2 == 0) ? 2 : 1;
    out.dual_square = ratio(square, den * den);

    if (square == -2 && div == 2) {
        out.kind = RayKind::divisorial_half;
        out.dc_values = {-1, -2};
    } else if (square == -2 && div == 1) {
        out.kind = RayKind::divisorial_two;
        out.dc_values = {-2};
    } else if (square == -10 && div == 2) {
        out.kind = RayKind::lagrangian_plane;
    } else if (div <= 2 && !admissible_square_div(square, div)) {
        out.kind = RayKind::inadmissible;
    } else {
        out.kind = RayKind::non_nodal;
    }
    return out;
}

RayType classify_wall(const AmbientVector& rho) {
    if (rho.is_zero()) throw PreconditionError("cannot classify the zero vector");
    return classify_square_div(bb_pair(rho, rho), divisibility(rho));
}

bool detect_isotropic_boundary(const PicardLattice& picard, const PicardVector& m) {
    if (m.size() != picard.rank()) throw ValidationError("M has the wrong number of coordinates");
    return picard.pair(m, m) == 0 && content(m) == 1;
}

}  // namespace hyperwall
