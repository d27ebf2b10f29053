// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "hyperwall/cohomology.hpp"
#include "hyperwall/cone.hpp"
#include "test_support.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <tuple>

using namespace hyperwall;
using namespace hyperwall::testing;

namespace {

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;  // 0 = no runtime requirement
    std::function<bool(std::ostringstream&)> check;
};

bool run_criterion(const Criterion& c) {
    std::ostringstream note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = c.check(note);
    } catch (const std::exception& e) {
        note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
        ok = false;
        note << " runtime " << secs << " s exceeds " << c.time_limit_s << " s";
    }
    std::printf("[%s] %d %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                note.str().empty() ? "" : ": ", note.str().c_str());
    return ok;
}

std::vector<PicardVector> coords_of(const std::vector<WallClass>& walls) {
    std::vector<PicardVector> out;
    for (const auto& w : walls) out.push_back(w.rho_picard);
    return out;
}

PicardVector segment_point(const PicardVector& g, const PicardVector& m, long num, long den) {
    PicardVector out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = num * m[i] + (den - num) * g[i];
    return out;
}

bool lattice_identities(std::ostringstream& note) {
    const AmbientLattice lat = make_k3_2_lattice();
    const Inertia s = signature_of(lat.gram);
    const Integer det = determinant(lat.gram);
    note << "rank " << lat.rank() << ", signature (" << s.positive << "," << s.negative << "), det " << det;
    return lat.rank() == 23 && s == Inertia{3, 20, 0} && det == 2 && bb_pair(delta(), delta()) == -2;
}

bool fujiki(std::ostringstream& note) {
    std::mt19937_64 rng(1001);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const AmbientVector a = random_ambient(rng, 50);
        const Integer s = bb_pair(a, a);
        if (quad_product(a, a, a, a) != 3 * s * s) ++bad;
    }
    note << bad << " of 1000 violate";
    return bad == 0;
}

bool qdual_identities(std::ostringstream& note) {
    std::mt19937_64 rng(1002);
    const auto q = MiddleClass::qdual({});
    if (middle_pair(q, q) != 575) {
        note << "q.q = " << rational_string(middle_pair(q, q));
        return false;
    }
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
        const AmbientVector a = random_ambient(rng, 50), b = random_ambient(rng, 50);
        const std::vector<AmbientVector> basis{a, b};
        if (middle_pair(MiddleClass::qdual(basis), MiddleClass::product(basis, 0, 1)) != Rational(25 * bb_pair(a, b)))
            ++bad;
    }
    note << "q.q = 575, " << bad << " of 100 pairs violate";
    return bad == 0;
}

bool congruence(std::ostringstream& note) {
    if (admissible_square_div(-4, 2)) {
        note << "(-4, 2) reported admissible";
        return false;
    }
    std::mt19937_64 rng(1004);
    std::uniform_int_distribution<long> odd(-500, 499);
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
        AmbientVector v = 2 * random_ambient(rng, 100);
        v[basis_index::delta] = 2 * odd(rng) + 1;
        if (divisibility(v) != 2) {
            ++bad;
            continue;
        }
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), Integer(bb_pair(v, v) + 2).get_mpz_t(), 8);
        if (r != 0) ++bad;
    }
    note << bad << " of 10000 violate";
    return bad == 0;
}

bool lagrangian(std::ostringstream& note) {
    const auto sys = lagrangian_solver();
    note << sys.eliminant_string();
    if (sys.eliminant != std::vector<Integer>{23, 20, -2100}) return false;
    if (sys.solutions.size() != 2 || sys.solutions[0].lambda_square != -10 ||
        sys.solutions[1].lambda_square != Rational(210, 23))
        return false;
    const auto& s = sys.solutions[0];
    if (!s.admissible || sys.solutions[1].admissible) return false;
    if (s.a != Rational(1, 20) || s.b != Rational(1, 8)) return false;
    for (const auto& r : plane_equation_residuals(s.lambda_square, s.a, s.b))
        if (r != 0) return false;

    // lambda = 2h + 3 delta, square -10.
    const std::vector<AmbientVector> basis{h(), delta()};
    RatMatrix t(2, 2);
    t(0, 0) = 4;
    t(0, 1) = t(1, 0) = 6;
    t(1, 1) = 9;
    const MiddleClass lam2(basis, t);
    const MiddleClass plane = MiddleClass::qdual(basis, s.a) + lam2.scaled(s.b);
    const Rational pp = middle_pair(plane, plane), lp = middle_pair(lam2, plane);
    note << ", x = -10, a = 1/20, b = 1/8, [P2].[P2] = " << rational_string(pp)
         << ", lambda^2.[P2] = " << rational_string(lp);
    return pp == 3 && lp == 25;
}

bool classification(std::ostringstream& note) {
    const bool ok = classify_square_div(-2, 2).dual_square == Rational(-1, 2) &&
                    classify_square_div(-2, 1).dual_square == -2 &&
                    classify_square_div(-10, 2).dual_square == Rational(-5, 2) &&
                    classify_square_div(-4, 2).kind == RayKind::inadmissible &&
                    classify_square_div(-2, 2).kind == RayKind::divisorial_half &&
                    classify_square_div(-2, 1).kind == RayKind::divisorial_two &&
                    classify_square_div(-10, 2).kind == RayKind::lagrangian_plane;
    note << "-1/2, -2, -5/2, inadmissible";
    return ok;
}

bool oracle_equivalence(std::ostringstream& note) {
    constexpr long kBox = 60;
    std::mt19937_64 rng(1007);
    std::uniform_int_distribution<long> coef(-4, 4);
    int lattices = 0, walls_total = 0, nonempty = 0, mismatches = 0;
    std::array<int, 3> by_rank{};
    while (lattices < 30) {
        const std::size_t rank = 2 + lattices % 3;
        const PicardLattice pic(lattices % 5 == 4 ? random_hyperbolic_basis(rng, rank)
                                                  : random_root_rich_basis(rng, rank));
        PicardVector g(rank), m(rank);
        for (auto& c : g) c = coef(rng);
        for (auto& c : m) c = coef(rng);
        if (pic.pair(g, g) <= 0 || pic.pair(m, m) <= 0 || pic.pair(g, m) <= 0) continue;
        if (wall_coordinate_bound(pic.gram(), g, m, 10) > kBox) continue;
        try {
            require_polarization(pic, g);
        } catch (const PreconditionError&) {
            continue;
        }
        WallQuery q;
        q.picard = &pic;
        q.g = g;
        q.m = m;
        const auto fast = enumerate_walls(q);
        const auto slow = brute_force_walls(q, kBox);
        if (fast != slow) ++mismatches;
        walls_total += static_cast<int>(slow.size());
        nonempty += !slow.empty();
        ++by_rank[rank - 2];
        ++lattices;
    }
    note << lattices << " lattices (rank 2/3/4: " << by_rank[0] << "/" << by_rank[1] << "/" << by_rank[2] << "), "
         << nonempty << " with walls, " << walls_total << " walls, " << mismatches << " mismatches";
    return mismatches == 0;
}

bool worked_fixture(std::ostringstream& note) {
    const PicardLattice pic = rank2_fixture();
    const auto g = fixture_g();
    WallQuery q;
    q.picard = &pic;
    q.g = g;
    q.level_cap = Integer(1000);

    q.targets = {{-2, 1}, {-2, 2}};
    const auto minus2 = coords_of(enumerate_walls(q));
    q.targets = {{-10, 2}};
    const auto minus10 = coords_of(enumerate_walls(q));
    const auto verdict = is_ample(pic, g, pv({2, 1}));
    const auto nef = nef_threshold(pic, g, pv({2, 1}));

    bool ok = minus2 == std::vector<PicardVector>{pv({0, 1})};
    ok = ok && minus10 == std::vector<PicardVector>{pv({2, -3}), pv({2, 3})};
    ok = ok && verdict.status == AmpleStatus::not_nef && coords_of(verdict.witnesses) == minus2;
    ok = ok && nef.tau == Rational(1, 2) && coords_of(nef.walls) == minus2;
    note << "(-2): " << minus2.size() << " wall, (-10): " << minus10.size() << " walls, 2h+delta "
         << to_string(verdict.status) << ", tau " << rational_string(nef.tau);
    return ok;
}

bool monotonicity(std::ostringstream& note) {
    const PicardLattice pic = rank2_fixture();
    const auto g = fixture_g();
    const auto m = pv({2, 1});
    const std::vector<std::tuple<long, long, AmpleStatus>> samples = {
        {1, 4, AmpleStatus::ample},
        {3, 8, AmpleStatus::ample},
        {5, 8, AmpleStatus::not_nef},
        {3, 4, AmpleStatus::not_nef},
    };
    bool ok = true;
    for (const auto& [num, den, want] : samples) {
        const auto got = is_ample(pic, g, segment_point(g, m, num, den)).status;
        note << num << "/" << den << " " << to_string(got) << "; ";
        ok = ok && got == want;
    }
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "lattice identities", 1.0, lattice_identities},
        {2, "Fujiki relation on 1000 random classes", 5.0, fujiki},
        {3, "q-dual pairings", 0, qdual_identities},
        {4, "divisibility-2 congruence", 0, congruence},
        {5, "Lagrangian plane system", 1.0, lagrangian},
        {6, "extremal ray classification", 0, classification},
        {7, "enumeration equals brute force on random lattices", 60.0, oracle_equivalence},
        {8, "worked rank-2 example", 0, worked_fixture},
        {9, "ampleness along a segment", 0, monotonicity},
    };
    int failed = 0;
    for (const auto& c : criteria)
        if (!run_criterion(c)) ++failed;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
