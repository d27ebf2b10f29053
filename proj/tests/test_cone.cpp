#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperwall/cone.hpp"
#include "test_support.hpp"

using namespace hyperwall;
using namespace hyperwall::testing;

namespace {

std::vector<PicardVector> coords_of(const std::vector<WallClass>& walls) {
    std::vector<PicardVector> out;
    for (const auto& w : walls) out.push_back(w.rho_picard);
    return out;
}

// Integer representative of t M + (1 - t) g for t = num / den.
PicardVector segment_point(const PicardVector& g, const PicardVector& m, long num, long den) {
    PicardVector out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = num * m[i] + (den - num) * g[i];
    return out;
}

}  // namespace

TEST_CASE("ampleness verdicts on the fixture") {
    const PicardLattice pic = rank2_fixture();
    const auto g = fixture_g();

    const auto self = is_ample(pic, g, g);
    CHECK(self.status == AmpleStatus::ample);
    CHECK(self.witnesses.empty());
    CHECK_FALSE(self.isotropic_flag);

    const auto boundary = is_ample(pic, g, pv({1, 0}));
    CHECK(boundary.status == AmpleStatus::nef_boundary);
    CHECK(coords_of(boundary.witnesses) == std::vector<PicardVector>{pv({0, 1})});

    const auto beyond = is_ample(pic, g, pv({2, 1}));
    CHECK(beyond.status == AmpleStatus::not_nef);
    CHECK(coords_of(beyond.witnesses) == std::vector<PicardVector>{pv({0, 1})});

    CHECK(is_ample(pic, g, pv({0, 1})).status == AmpleStatus::not_positive);
    CHECK(is_ample(pic, g, pv({-3, 1})).status == AmpleStatus::not_positive);
    CHECK(is_ample(pic, g, pv({0, 0})).status == AmpleStatus::not_positive);

    CHECK(is_ample(pic, g, pv({2, 1}), 4).witnesses == beyond.witnesses);
}

TEST_CASE("nef thresholds on the fixture") {
    const PicardLattice pic = rank2_fixture();
    const auto g = fixture_g();

    const auto half = nef_threshold(pic, g, pv({2, 1}));
    CHECK(half.tau == Rational(1, 2));
    CHECK(coords_of(half.walls) == std::vector<PicardVector>{pv({0, 1})});

    const auto full = nef_threshold(pic, g, g);
    CHECK(full.tau == 1);
    CHECK(full.walls.empty());

    const auto touching = nef_threshold(pic, g, pv({1, 0}));
    CHECK(touching.tau == 1);
    CHECK(coords_of(touching.walls) == std::vector<PicardVector>{pv({0, 1})});

    CHECK_THROWS_AS(nef_threshold(pic, g, pv({1, 1})), PreconditionError);
    CHECK_THROWS_AS(nef_threshold(pic, g, pv({-1, 0})), PreconditionError);
    CHECK_THROWS_AS(nef_threshold(pic, g, pv({1})), ValidationError);
}

TEST_CASE("g must be a polarization") {
    const PicardLattice pic = rank2_fixture();
    CHECK_THROWS_AS(is_ample(pic, pv({1, 0}), pv({3, -1})), PreconditionError);
    CHECK_THROWS_AS(nef_threshold(pic, pv({1, 0}), pv({3, -1})), PreconditionError);
    CHECK_THROWS_AS(is_ample(pic, fixture_g(), pv({1, 2, 3})), ValidationError);
}

TEST_CASE("isotropic M") {
    const PicardLattice pic = rank2_fixture();
    const auto g = fixture_g();

    const auto plus = is_ample(pic, g, pv({1, 1}));
    CHECK(plus.status == AmpleStatus::not_nef);
    // (delta, h + delta) = -2 and (2h + 3 delta, h + delta) = -2.
    CHECK(coords_of(plus.witnesses) == std::vector<PicardVector>{pv({0, 1}), pv({2, 3})});
    CHECK_FALSE(plus.isotropic_flag);

    const auto minus = is_ample(pic, g, pv({1, -1}));
    CHECK(minus.status == AmpleStatus::not_nef);
    CHECK(coords_of(minus.witnesses) == std::vector<PicardVector>{pv({2, -3})});

    CHECK(detect_isotropic_boundary(pic, pv({1, 1})));
    CHECK(detect_isotropic_boundary(pic, pv({1, -1})));
    CHECK_FALSE(detect_isotropic_boundary(pic, pv({2, 2})));
    CHECK_FALSE(detect_isotropic_boundary(pic, pv({2, 0})));

    // Hyperbolic plane span{e1, f1}: the only wall with (rho, g) > 0 is e1 - f1.
    const PicardLattice u({e1(), f1()});
    const auto ug = pv({1, 2});
    const auto across = is_ample(u, ug, pv({1, 0}));
    CHECK(across.status == AmpleStatus::not_nef);
    CHECK(coords_of(across.witnesses) == std::vector<PicardVector>{pv({1, -1})});
    CHECK_FALSE(across.isotropic_flag);

    const auto edge = is_ample(u, ug, pv({0, 1}));
    CHECK(edge.status == AmpleStatus::nef_boundary);
    CHECK(edge.witnesses.empty());
    CHECK(edge.isotropic_flag);
}

TEST_CASE("verdicts along the segment from g to 2h + delta") {
    const PicardLattice pic = rank2_fixture();
    const auto g = fixture_g();
    const auto m = pv({2, 1});
    const std::vector<std::pair<long, AmpleStatus>> expected = {
        {0, AmpleStatus::ample},        {2, AmpleStatus::ample},   {3, AmpleStatus::ample},
        {4, AmpleStatus::nef_boundary}, {5, AmpleStatus::not_nef}, {6, AmpleStatus::not_nef},
        {8, AmpleStatus::not_nef},
    };
    for (const auto& [eighths, status] : expected) {
        CAPTURE(eighths);
        CHECK(is_ample(pic, g, segment_point(g, m, eighths, 8)).status == status);
    }
}

TEST_CASE("random lattices: threshold, monotonicity, stability") {
    std::mt19937_64 rng(314);
    std::uniform_int_distribution<long> coef(-4, 4);
    int done = 0;
    while (done < 12) {
        const std::size_t rank = 2 + done % 3;
        const PicardLattice pic(done % 2 ? random_hyperbolic_basis(rng, rank) : random_root_rich_basis(rng, rank));
        PicardVector g(rank), m(rank);
        for (auto& c : g) c = coef(rng);
        for (auto& c : m) c = coef(rng);
        if (pic.pair(g, g) <= 0 || pic.pair(m, m) <= 0 || pic.pair(g, m) <= 0) continue;
        try {
            require_polarization(pic, g);
        } catch (const PreconditionError&) {
            continue;
        }
        const auto verdict = is_ample(pic, g, m);
        const auto nef = nef_threshold(pic, g, m);
        CHECK(nef.tau > 0);
        CHECK(nef.tau <= 1);
        const bool nef_at_one = verdict.status == AmpleStatus::ample || verdict.status == AmpleStatus::nef_boundary;
        CHECK((nef.tau == 1) == nef_at_one);
        if (verdict.status == AmpleStatus::ample) CHECK(nef.walls.empty());

        // Points strictly inside [0, tau) are ample, tau itself is on the boundary.
        const long num = nef.tau.get_num().get_si(), den = nef.tau.get_den().get_si();
        CHECK(is_ample(pic, g, segment_point(g, m, num, 2 * den)).status == AmpleStatus::ample);
        const auto at_tau = is_ample(pic, g, segment_point(g, m, num, den));
        CHECK((at_tau.status == AmpleStatus::nef_boundary || (nef.tau == 1 && at_tau.status == AmpleStatus::ample)));
        if (nef.tau < 1) {
            CHECK(at_tau.status == AmpleStatus::nef_boundary);
            // Just past tau.
            CHECK(is_ample(pic, g, segment_point(g, m, 2 * num + 1, 2 * den)).status == AmpleStatus::not_nef);
        }

        // Adding g to an ample class keeps it ample.
        if (verdict.status == AmpleStatus::ample) {
            PicardVector shifted = m;
            for (std::size_t i = 0; i < rank; ++i) shifted[i] += g[i];
            CHECK(is_ample(pic, g, shifted).status == AmpleStatus::ample);
        }
        ++done;
    }
}

TEST_CASE("classification of wall classes") {
    const auto half = classify_wall(delta());
    CHECK(half.kind == RayKind::divisorial_half);
    CHECK(half.square == -2);
    CHECK(half.div == 2);
    CHECK(half.dual_square == Rational(-1, 2));
    CHECK(half.dc_values == std::vector<int>{-1, -2});

    const auto two = classify_wall(e1() - f1());
    CHECK(two.kind == RayKind::divisorial_two);
    CHECK(two.dual_square == -2);
    CHECK(two.dc_values == std::vector<int>{-2});

    const auto plane = classify_wall(2 * h() + 3 * delta());
    CHECK(plane.kind == RayKind::lagrangian_plane);
    CHECK(plane.dual_square == Rational(-5, 2));
    CHECK(plane.dc_values.empty());

    const auto other = classify_wall(e1() - 3 * f1());
    CHECK(other.kind == RayKind::non_nodal);
    CHECK(other.square == -6);
    CHECK(other.div == 1);

    CHECK(classify_square_div(-4, 2).kind == RayKind::inadmissible);
    CHECK(classify_square_div(-18, 2).kind == RayKind::non_nodal);
    CHECK(classify_square_div(-18, 2).dual_square == Rational(-9, 2));

    CHECK_THROWS_AS(classify_wall(AmbientVector{}), PreconditionError);
    CHECK_THROWS_AS(classify_wall(h()), PreconditionError);
    CHECK_THROWS_AS(classify_wall(e1()), PreconditionError);
    CHECK_THROWS_AS(classify_square_div(-2, 0), ValidationError);

    CHECK(to_string(RayKind::lagrangian_plane) == "lagrangian_plane");
    CHECK(to_string(AmpleStatus::nef_boundary) == "nef_boundary");
}

TEST_CASE("every enumerated wall classifies into its target kind") {
    const PicardLattice pic = rank2_fixture();
    WallQuery q;
    q.picard = &pic;
    q.g = fixture_g();
    q.level_cap = Integer(200);
    for (const auto& w : enumerate_walls(q)) {
        const auto t = classify_wall(w.rho_ambient);
        CHECK(t.square == w.square);
        CHECK(t.div == w.div);
        CHECK(t.kind != RayKind::inadmissible);
        CHECK(t.kind != RayKind::non_nodal);
    }
}
