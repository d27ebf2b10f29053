#include "hyperwall/cohomology.hpp"

#include <algorithm>

namespace hyperwall {

Integer quad_product(const AmbientVector& a1, const AmbientVector& a2, const AmbientVector& a3,
                     const AmbientVector& a4) {
    return bb_pair(a1, a2) * bb_pair(a3, a4) + bb_pair(a1, a3) * bb_pair(a2, a4) + bb_pair(a1, a4) * bb_pair(a2, a3);
}

MiddleClass::MiddleClass(std::vector<AmbientVector> basis, RatMatrix tensor, Rational qdual_coeff)
    : basis_(std::move(basis)), tensor_(std::move(tensor)), qdual_(std::move(qdual_coeff)) {
    if (tensor_.rows() != basis_.size() || tensor_.cols() != basis_.size())
        throw ValidationError("middle class tensor must be n x n for a basis of n classes");
    for (std::size_t i = 0; i < tensor_.rows(); ++i)
        for (std::size_t j = 0; j < tensor_.cols(); ++j) tensor_(i, j).canonicalize();
    qdual_.canonicalize();
    if (!tensor_.is_symmetric()) throw ValidationError("middle class tensor must be symmetric");
}

MiddleClass MiddleClass::qdual(std::vector<AmbientVector> basis, Rational coeff) {
    const std::size_t n = basis.size();
    return MiddleClass(std::move(basis), RatMatrix(n, n), std::move(coeff));
}

MiddleClass MiddleClass::product(std::vector<AmbientVector> basis, std::size_t i, std::size_t j, Rational coeff) {
    const std::size_t n = basis.size();
    if (i >= n || j >= n) throw ValidationError("middle class product index out of range");
    RatMatrix t(n, n);
    if (i == j) {
        t(i, i) = coeff;
    } else {
        t(i, j) = coeff / 2;
        t(j, i) = coeff / 2;
    }
    return MiddleClass(std::move(basis), std::move(t));
}

MiddleClass MiddleClass::operator+(const MiddleClass& o) const {
    if (basis_ != o.basis_) throw ValidationError("middle classes over different divisor bases");
    RatMatrix t = tensor_;
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) += o.tensor_(i, j);
    return MiddleClass(basis_, std::move(t), qdual_ + o.qdual_);
}

MiddleClass MiddleClass::scaled(const Rational& s) const {
    RatMatrix t = tensor_;
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) *= s;
    return MiddleClass(basis_, std::move(t), qdual_ * s);
}

Rational middle_pair(const MiddleClass& x, const MiddleClass& y) {
    if (x.basis() != y.basis()) throw ValidationError("middle_pair: classes over different divisor bases");
    const auto& basis = x.basis();
    const std::size_t n = basis.size();

    IntMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) p(i, j) = p(j, i) = bb_pair(basis[i], basis[j]);

    // (b_i b_j).(b_k b_l) = p_ij p_kl + p_ik p_jl + p_il p_jk
    Rational tensor_part = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (x.tensor()(i, j) == 0) continue;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    if (y.tensor()(k, l) == 0) continue;
                    const Integer quad = p(i, j) * p(k, l) + p(i, k) * p(j, l) + p(i, l) * p(j, k);
                    tensor_part += x.tensor()(i, j) * y.tensor()(k, l) * Rational(quad);
                }
        }

    auto trace_against_form = [&](const MiddleClass& c) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s += c.tensor()(i, j) * Rational(p(i, j));
        return s;
    };
    const Rational q = kQdualPairing;
    return tensor_part + x.qdual_coeff() * q * trace_against_form(y) + y.qdual_coeff() * q * trace_against_form(x) +
           x.qdual_coeff() * y.qdual_coeff() * Rational(kQdualSquare);
}

Rational c2_pair(const AmbientVector& a, const AmbientVector& b) {
    return kC2OverQdual * Rational(kQdualPairing) * Rational(bb_pair(a, b));
}

bool fujiki_check(const AmbientVector& a) {
    const Integer s = bb_pair(a, a);
    return quad_product(a, a, a, a) == kFujikiConstant * s * s;
}

namespace {

// Dense polynomial in x over Q, lowest degree first.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> c) : c_(c) { trim(); }

    static Poly x() { return Poly{0, 1}; }

    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly out;
        out.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out.c_[i] += b.c_[i];
        out.trim();
        return out;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + b * Poly{-1}; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        if (a.is_zero() || b.is_zero()) return out;
        out.c_.resize(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        out.trim();
        return out;
    }

    /// Divides out the largest power of x.
    Poly without_zero_roots() const {
        Poly out = *this;
        while (!out.c_.empty() && out.c_.front() == 0) out.c_.erase(out.c_.begin());
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

Poly constant(long v) { return Poly{Rational(v)}; }
Poly constant(const Rational& v) { return Poly{v}; }

// Integer multiple with coprime coefficients and positive leading term,
// highest degree first.
std::vector<Integer> primitive_integer_form(const Poly& p) {
    Integer lcm_den = 1;
    for (const auto& c : p.coeffs()) lcm_den = lcm(lcm_den, c.get_den());
    std::vector<Integer> ints;
    for (const auto& c : p.coeffs()) ints.push_back(Rational(c * lcm_den).get_num());
    const Integer g = content(ints);
    const Integer sign = ints.back() < 0 ? -1 : 1;
    for (auto& v : ints) v = v / g * sign;
    std::reverse(ints.begin(), ints.end());
    return ints;
}

bool is_square(const Integer& n, Integer& root) {
    if (n < 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root * root == n;
}

}  // namespace

std::array<Rational, 3> plane_equation_residuals(const Rational& x, const Rational& a, const Rational& b) {
    const Rational q2 = kQdualSquare;
    const Rational q = kQdualPairing;
    const Rational self = q2 * a * a + 2 * q * a * b * x + 3 * b * b * x * x - 3;
    const Rational chern = Rational(-3) - kC2OverQdual * (q2 * a + q * b * x);
    const Rational restriction = x * x / 4 - (q * a * x + 3 * b * x * x);
    return {self, chern, restriction};
}

std::string LagrangianSystem::eliminant_string() const {
    std::string out;
    const std::size_t deg = eliminant.empty() ? 0 : eliminant.size() - 1;
    for (std::size_t i = 0; i < eliminant.size(); ++i) {
        const Integer& c = eliminant[i];
        if (c == 0) continue;
        const std::size_t power = deg - i;
        if (!out.empty() || c < 0) out += (c < 0 ? "-" : "+");
        const Integer mag = abs(c);
        if (mag != 1 || power == 0) out += mag.get_str();
        if (power >= 1) out += "x";
        if (power >= 2) out += "^" + std::to_string(power);
    }
    return (out.empty() ? "0" : out) + "=0";
}

LagrangianSystem lagrangian_solver() {
    const Poly x = Poly::x();
    const Rational q2 = kQdualSquare;
    const Rational q = kQdualPairing;

    // Linear rows  alpha * a + beta * b = gamma  with polynomial coefficients.
    // (ii):        (6/5) 575 a + (6/5) 25 x b = -3
    // (iii) / x:   25 a + 3 x b = x / 4        (x = 0 is checked separately)
    const Poly alpha1 = constant(kC2OverQdual * q2), beta1 = constant(kC2OverQdual * q) * x, gamma1 = constant(-3);
    const Poly alpha2 = constant(q), beta2 = constant(3) * x, gamma2 = constant(Rational(1, 4)) * x;

    const Poly det = alpha1 * beta2 - beta1 * alpha2;
    const Poly a_num = gamma1 * beta2 - beta1 * gamma2;
    const Poly b_num = alpha1 * gamma2 - gamma1 * alpha2;

    // (i) multiplied by det^2.
    const Poly cleared = constant(q2) * a_num * a_num + constant(2 * q) * a_num * b_num * x +
                         constant(3) * b_num * b_num * x * x - constant(3) * det * det;
    const Poly reduced = cleared.without_zero_roots();

    LagrangianSystem out;
    out.eliminant = primitive_integer_form(reduced);

    std::vector<Rational> roots;
    if (out.eliminant.size() == 3) {
        const Integer& c2 = out.eliminant[0];
        const Integer& c1 = out.eliminant[1];
        const Integer& c0 = out.eliminant[2];
        const Integer disc = c1 * c1 - 4 * c2 * c0;
        Integer root;
        if (is_square(disc, root)) {
            roots.push_back(ratio(-c1 - root, 2 * c2));
            if (root != 0) roots.push_back(ratio(-c1 + root, 2 * c2));
        }
    } else if (out.eliminant.size() == 2) {
        roots.push_back(ratio(-out.eliminant[1], out.eliminant[0]));
    }
    // x = 0: (iii) holds trivially, b drops out of (i) and (ii), and a is fixed by (ii).
    {
        const Rational a0 = Rational(-3) / (kC2OverQdual * q2);
        if (plane_equation_residuals(0, a0, 0)[0] == 0) roots.push_back(0);
    }
    std::sort(roots.begin(), roots.end());

    for (const auto& r : roots) {
        if (r == 0) {
            out.solutions.push_back(PlaneSolution{0, Rational(-3) / (kC2OverQdual * q2), 0, false});
            continue;
        }
        const Rational d = det(r);
        if (d == 0) continue;
        PlaneSolution s{r, a_num(r) / d, b_num(r) / d, false};
        s.admissible = r < 0 && r.get_den() == 1 && admissible_square_div(r.get_num(), 2);
        out.solutions.push_back(std::move(s));
    }
    return out;
}

CurveClass line_class_of_plane(const AmbientVector& lambda) {
    if (lambda.is_zero()) throw PreconditionError("line_class_of_plane: zero class");
    const Integer sq = bb_pair(lambda, lambda);
    if (sq != -10) throw PreconditionError("line_class_of_plane: (lambda, lambda) = " + sq.get_str() + ", expected -10");
    const Integer div = divisibility(lambda);
    if (div != 2) throw PreconditionError("line_class_of_plane: divisibility " + div.get_str() + ", expected 2");
    return CurveClass{lambda, Integer(2)};
}

}  // namespace hyperwall
