#include "hyperwall/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace hyperwall {

std::vector<WallTarget> default_targets() { return {{-2, 1}, {-2, 2}, {-10, 2}}; }

namespace {

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Unimodular U with w^T U = (d, 0, ..., 0), d = gcd(w) > 0, by column
// operations built from extended Euclid steps.
IntMatrix unimodular_completion(std::span<const Integer> w, Integer& d) {
    const std::size_t r = w.size();
    IntMatrix u(r, r);
    for (std::size_t i = 0; i < r; ++i) u(i, i) = 1;
    std::vector<Integer> v(w.begin(), w.end());

    for (std::size_t j = 1; j < r; ++j) {
        if (v[j] == 0) continue;
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v[0].get_mpz_t(), v[j].get_mpz_t());
        const Integer a = v[0] / g;
        const Integer b = v[j] / g;
        // [col0 colj] <- [col0 colj] * [[s, -b], [t, a]], determinant s*a + t*b = 1.
        for (std::size_t i = 0; i < r; ++i) {
            const Integer c0 = u(i, 0);
            const Integer cj = u(i, j);
            u(i, 0) = s * c0 + t * cj;
            u(i, j) = a * cj - b * c0;
        }
        v[0] = g;
        v[j] = 0;
    }
    if (v[0] < 0) {
        for (std::size_t i = 0; i < r; ++i) u(i, 0) = -u(i, 0);
        v[0] = -v[0];
    }
    d = v[0];
    return u;
}

// Precomputed data for the affine slices {x : (x, g) = k} of one Picard
// lattice. Writing x = (k/d) u0 + B y with B a basis of g^perp, the square
// becomes const(k) - q(y - c(k)) with q positive definite.
class SliceKernel {
public:
    SliceKernel(const PicardLattice& picard, const PicardVector& g) {
        const std::size_t r = picard.rank();
        if (g.size() != r) throw ValidationError("polarization has the wrong number of coordinates");
        const auto w = picard.gram_times(g);
        if (std::all_of(w.begin(), w.end(), [](const Integer& c) { return c == 0; }))
            throw PreconditionError("polarization is zero or in the radical of the Picard form");
        const IntMatrix u = unimodular_completion(w, gcd_);
        n_ = r - 1;

        u0_.resize(r);
        for (std::size_t i = 0; i < r; ++i) u0_[i] = u(i, 0);
        basis_.assign(n_, PicardVector(r));
        for (std::size_t c = 0; c < n_; ++c)
            for (std::size_t i = 0; i < r; ++i) basis_[c][i] = u(i, c + 1);

        // A = -B^T G B, positive definite iff g^perp is negative definite.
        RatMatrix a(n_, n_);
        std::vector<PicardVector> gb(n_);
        for (std::size_t c = 0; c < n_; ++c) gb[c] = picard.gram_times(basis_[c]);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) a(i, j) = Rational(-dot(basis_[i], gb[j]));

        // c1 = A^{-1} B^T G u0; the center at level k is (k/d) c1.
        std::vector<Rational> rhs(n_);
        for (std::size_t i = 0; i < n_; ++i) rhs[i] = Rational(dot(gb[i], u0_));

        factor(a);
        if (n_ > 0) {
            auto c1 = solve_linear(a, rhs);
            if (!c1) throw PreconditionError("restriction of the Picard form to g^perp is degenerate");
            center_unit_ = std::move(*c1);
        }
        // const(k) + b.c = (k/d)^2 * (u0.G.u0 + (B^T G u0).c1)
        norm_unit_ = Rational(picard.pair(u0_, u0_));
        for (std::size_t i = 0; i < n_; ++i) norm_unit_ += rhs[i] * center_unit_[i];
    }

    std::vector<PicardVector> solve(const Integer& level, const Integer& square) const {
        std::vector<PicardVector> out;
        if (level % gcd_ != 0) return out;
        const Integer scale = level / gcd_;
        const Rational scale_q(scale);
        const Rational budget = scale_q * scale_q * norm_unit_ - Rational(square);
        if (budget < 0) return out;

        std::vector<Rational> center(n_);
        for (std::size_t i = 0; i < n_; ++i) center[i] = scale_q * center_unit_[i];

        std::vector<Integer> y(n_);
        std::vector<Rational> offset(n_);  // y_j - c_j
        auto emit = [&] {
            PicardVector x(u0_.size());
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = scale * u0_[i];
            for (std::size_t c = 0; c < n_; ++c)
                if (y[c] != 0)
                    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[c] * basis_[c][i];
            out.push_back(std::move(x));
        };

        if (n_ == 0) {
            if (budget == 0) emit();
        } else {
            search(n_ - 1, budget, center, y, offset, emit);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    // q(u) = sum_i diag_i (u_i + sum_{j>i} mu_ij u_j)^2
    void factor(const RatMatrix& a) {
        RatMatrix s = a;
        diag_.resize(n_);
        mu_ = RatMatrix(n_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            diag_[i] = s(i, i);
            if (diag_[i] <= 0)
                throw PreconditionError("restriction of the Picard form to g^perp is not negative definite");
            for (std::size_t j = i + 1; j < n_; ++j) mu_(i, j) = s(i, j) / diag_[i];
            for (std::size_t j = i + 1; j < n_; ++j)
                for (std::size_t l = i + 1; l < n_; ++l) s(j, l) -= s(j, i) * mu_(i, l);
        }
    }

    template <typename Emit>
    void search(std::size_t i, const Rational& budget, const std::vector<Rational>& center, std::vector<Integer>& y,
                std::vector<Rational>& offset, Emit& emit) const {
        Rational z = center[i];
        for (std::size_t j = i + 1; j < n_; ++j) z -= mu_(i, j) * offset[j];
        const Rational reach = budget / diag_[i];
        const Integer rad = isqrt_floor(reach) + 1;
        Integer lo = floor_of(z) - rad;
        Integer hi = ceil_of(z) + rad;
        auto fits = [&](const Integer& t) {
            const Rational dv = Rational(t) - z;
            return dv * dv <= reach;
        };
        while (lo <= hi && !fits(lo)) ++lo;
        while (hi >= lo && !fits(hi)) --hi;
        for (Integer t = lo; t <= hi; ++t) {
            const Rational dv = Rational(t) - z;
            const Rational rest = budget - diag_[i] * dv * dv;
            y[i] = t;
            offset[i] = Rational(t) - center[i];
            if (i == 0) {
                if (rest == 0) emit();
            } else {
                search(i - 1, rest, center, y, offset, emit);
            }
        }
    }

    Integer gcd_;
    std::size_t n_ = 0;
    PicardVector u0_;
    std::vector<PicardVector> basis_;
    std::vector<Rational> diag_;
    RatMatrix mu_;
    std::vector<Rational> center_unit_;
    Rational norm_unit_;
};

bool accepts(const std::vector<WallTarget>& targets, const Integer& square, const Integer& div) {
    return std::any_of(targets.begin(), targets.end(),
                       [&](const WallTarget& t) { return t.square == square && t.div == div; });
}

std::set<Integer> target_squares(const std::vector<WallTarget>& targets) {
    std::set<Integer> out;
    for (const auto& t : targets) out.insert(t.square);
    return out;
}

}  // namespace

void validate_query(const WallQuery& q) {
    if (q.picard == nullptr) throw ValidationError("wall query without a Picard lattice");
    const PicardLattice& pic = *q.picard;
    if (q.g.size() != pic.rank()) throw ValidationError("g has the wrong number of coordinates");
    if (q.m && q.m->size() != pic.rank()) throw ValidationError("m has the wrong number of coordinates");
    for (const auto& t : q.targets) {
        if (t.div != 1 && t.div != 2) throw ValidationError("target divisibility must be 1 or 2");
        if (t.square >= 0) throw ValidationError("target squares must be negative");
    }
    if (q.level_cap && *q.level_cap < 0) throw ValidationError("level cap must be nonnegative");
    pic.require_hyperbolic();
    if (pic.pair(q.g, q.g) <= 0) throw PreconditionError("g is not in the positive cone: (g, g) <= 0");
    if (q.m) {
        if (pic.pair(*q.m, *q.m) < 0) throw PreconditionError("m is not in the positive cone: (m, m) < 0");
        if (pic.pair(*q.m, q.g) <= 0)
            throw PreconditionError("m lies in the other component of the positive cone: (m, g) <= 0");
    }
}

Integer max_level(const WallQuery& q, const Integer& square) {
    std::optional<Integer> bound = q.level_cap;
    auto tighten = [&](const Integer& b) { bound = bound ? std::min(*bound, b) : b; };
    const Integer s = abs(square);
    if (q.m) {
        const PicardLattice& pic = *q.picard;
        const Integer mm = pic.pair(*q.m, *q.m);
        const Integer gm = pic.pair(q.g, *q.m);
        const Integer gg = pic.pair(q.g, q.g);
        if (mm > 0) {
            // Cauchy-Schwarz on the g^perp components of rho and m:
            // k^2 (m,m) <= |s| ((g,m)^2 - (g,g)(m,m)).
            tighten(isqrt_floor(ratio(s * (gm * gm - gg * mm), mm)));
        } else if (mm == 0 && q.strict) {
            // In the plane <g, m>: (rho, m) <= -1 forces (rho, g) <= |s| (g,m) / 2.
            tighten(floor_of(ratio(s * gm, 2)));
        }
    }
    if (!bound)
        throw PreconditionError(
            "wall set is not finite for this query: supply m with (m, m) > 0 or a level cap");
    return *bound;
}

std::vector<PicardVector> slice_solutions(const PicardLattice& picard, const PicardVector& g, const Integer& level,
                                          const Integer& square) {
    if (level < 0) throw ValidationError("slice level must be nonnegative");
    return SliceKernel(picard, g).solve(level, square);
}

std::vector<WallClass> enumerate_walls(const WallQuery& q) {
    validate_query(q);
    const PicardLattice& pic = *q.picard;
    const SliceKernel kernel(pic, q.g);
    const std::optional<PicardVector> gm = q.m ? std::optional(pic.gram_times(*q.m)) : std::nullopt;

    struct Job {
        Integer square;
        Integer level;
    };
    std::vector<Job> jobs;
    for (const auto& s : target_squares(q.targets)) {
        const Integer top = max_level(q, s);
        for (Integer k = 1; k <= top; ++k) jobs.push_back({s, k});
    }

    auto run = [&](std::size_t start, std::size_t stride, std::vector<WallClass>& out) {
        for (std::size_t i = start; i < jobs.size(); i += stride) {
            for (auto& x : kernel.solve(jobs[i].level, jobs[i].square)) {
                if (gm) {
                    const Integer pm = dot(*gm, x);
                    if (q.strict ? pm >= 0 : pm > 0) continue;
                }
                const Integer div = pic.divisibility_of(x);
                if (!accepts(q.targets, jobs[i].square, div)) continue;
                AmbientVector amb = pic.to_ambient(x);
                out.push_back(WallClass{std::move(amb), std::move(x), jobs[i].square, div});
            }
        }
    };

    std::vector<WallClass> walls;
    const std::size_t workers = std::min<std::size_t>(std::max(1u, q.threads), std::max<std::size_t>(1, jobs.size()));
    if (workers <= 1) {
        run(0, 1, walls);
    } else {
        std::vector<std::vector<WallClass>> parts(workers);
        {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w, workers, std::ref(parts[w]));
        }
        for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(walls));
    }
    std::sort(walls.begin(), walls.end(),
              [](const WallClass& a, const WallClass& b) { return a.rho_picard < b.rho_picard; });
    return walls;
}

std::vector<WallClass> brute_force_walls(const WallQuery& q, long box) {
    validate_query(q);
    std::vector<WallClass> out;
    if (box < 1) return out;
    const PicardLattice& pic = *q.picard;
    const std::size_t r = pic.rank();

    constexpr std::int64_t kLimit = std::int64_t{1} << 62;
    auto narrow = [&](const Integer& z) {
        if (!z.fits_slong_p()) throw std::overflow_error("brute_force_walls: entry exceeds machine range");
        return static_cast<std::int64_t>(z.get_si());
    };

    std::vector<std::int64_t> gram(r * r);
    std::int64_t max_entry = 1;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            gram[i * r + j] = narrow(pic.gram()(i, j));
            max_entry = std::max(max_entry, std::abs(gram[i * r + j]));
        }
    auto linear_form = [&](const PicardVector& v) {
        std::vector<std::int64_t> w(r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) w[i] += gram[i * r + j] * narrow(v[j]);
        return w;
    };
    const auto wg = linear_form(q.g);
    const auto wm = q.m ? linear_form(*q.m) : std::vector<std::int64_t>{};
    std::int64_t max_linear = 1;
    for (auto c : wg) max_linear = std::max(max_linear, std::abs(c));
    for (auto c : wm) max_linear = std::max(max_linear, std::abs(c));
    const auto r64 = static_cast<std::int64_t>(r);
    if (max_entry > kLimit / (box * box * r64 * r64) || max_linear > kLimit / (box * r64))
        throw std::overflow_error("brute_force_walls: box too large for machine integers");

    std::vector<std::int64_t> squares;
    for (const auto& t : q.targets) squares.push_back(narrow(t.square));
    const bool capped = q.level_cap.has_value();
    const std::int64_t cap = capped ? narrow(*q.level_cap) : 0;

    // Ambient data for an independent divisibility computation.
    const IntMatrix& lam = k3_2_lattice().gram;
    std::vector<std::int64_t> amb_basis(r * kAmbientRank);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < kAmbientRank; ++k) amb_basis[i * kAmbientRank + k] = narrow(pic.basis()[i][k]);
    auto ambient_div = [&](const std::vector<std::int64_t>& x) {
        std::vector<__int128> v(kAmbientRank, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < kAmbientRank; ++k) v[k] += static_cast<__int128>(x[i]) * amb_basis[i * kAmbientRank + k];
        std::int64_t g = 0;
        for (std::size_t j = 0; j < kAmbientRank; ++j) {
            __int128 s = 0;
            for (std::size_t k = 0; k < kAmbientRank; ++k) s += v[k] * static_cast<std::int64_t>(lam(k, j).get_si());
            g = std::gcd(g, static_cast<std::int64_t>(s < 0 ? -s : s));
        }
        return g;
    };

    const std::size_t last = r - 1;
    const std::int64_t g_ll = gram[last * r + last];
    std::vector<std::int64_t> x(r, -box);
    for (;;) {
        // Prefix contributions of x_0 .. x_{r-2}.
        std::int64_t qp = 0, cross = 0, lg = 0, lm = 0;
        for (std::size_t i = 0; i < last; ++i) {
            for (std::size_t j = 0; j < last; ++j) qp += gram[i * r + j] * x[i] * x[j];
            cross += gram[i * r + last] * x[i];
            lg += wg[i] * x[i];
            if (q.m) lm += wm[i] * x[i];
        }
        for (std::int64_t t = -box; t <= box; ++t) {
            const std::int64_t sq = qp + t * (2 * cross + g_ll * t);
            if (std::find(squares.begin(), squares.end(), sq) == squares.end()) continue;
            const std::int64_t level = lg + wg[last] * t;
            if (level <= 0 || (capped && level > cap)) continue;
            if (q.m) {
                const std::int64_t pm = lm + wm[last] * t;
                if (q.strict ? pm >= 0 : pm > 0) continue;
            }
            x[last] = t;
            const std::int64_t div = ambient_div(x);
            if (!accepts(q.targets, Integer(static_cast<long>(sq)), Integer(static_cast<long>(div)))) continue;
            PicardVector coords(r);
            for (std::size_t i = 0; i < r; ++i) coords[i] = static_cast<long>(x[i]);
            out.push_back(WallClass{pic.to_ambient(coords), coords, Integer(static_cast<long>(sq)),
                                    Integer(static_cast<long>(div))});
        }
        // Advance the prefix odometer.
        std::size_t pos = 0;
        while (pos < last && x[pos] == box) x[pos++] = -box;
        if (pos == last) break;
        ++x[pos];
    }
    std::sort(out.begin(), out.end(), [](const WallClass& a, const WallClass& b) { return a.rho_picard < b.rho_picard; });
    return out;
}

void require_polarization(const PicardLattice& picard, const PicardVector& g, const std::vector<WallTarget>& targets) {
    if (g.size() != picard.rank()) throw ValidationError("g has the wrong number of coordinates");
    picard.require_hyperbolic();
    if (picard.pair(g, g) <= 0) throw PreconditionError("g is not in the positive cone: (g, g) <= 0");
    const SliceKernel kernel(picard, g);
    for (const auto& s : target_squares(targets))
        for (const auto& x : kernel.solve(0, s)) {
            const Integer div = picard.divisibility_of(x);
            if (accepts(targets, s, div)) {
                std::string coords;
                for (const auto& c : x) coords += (coords.empty() ? "" : ",") + c.get_str();
                throw PreconditionError("g is not ample: it is orthogonal to the wall class (" + coords +
                                        ") of square " + s.get_str());
            }
        }
}

}  // namespace hyperwall
