#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperwall {

using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed data: wrong dimensions, dependent bases, unparsable input.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed data that violates a mathematical precondition
/// (signature, positivity, non-ample polarization, zero vector).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Dense row-major matrix over Integer or Rational.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

/// num / den in canonical form; den must be nonzero.
inline Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// floor(q) and ceil(q) for an exact rational.
inline Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// Largest n >= 0 with n*n <= q; q must be nonnegative.
inline Integer isqrt_floor(const Rational& q) {
    Integer f = floor_of(q);
    if (f < 0) return 0;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
    return r;
}

/// "p/q" with q >= 1, also for integers ("3/1").
inline std::string rational_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p/q" or a plain decimal integer.
inline Rational parse_rational(std::string_view text) {
    Rational q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
        throw ValidationError("not an exact rational: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

inline Integer parse_integer(std::string_view text) {
    Integer z;
    if (text.empty() || z.set_str(std::string(text), 10) != 0)
        throw ValidationError("not an integer: '" + std::string(text) + "'");
    return z;
}

}  // namespace hyperwall
