#include "pcert/arith/rat_matrix.hpp"

#include "pcert/error.hpp"

#include <utility>

namespace pcert {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw Error(Errc::ArityMismatch, "ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RatMatrix RatMatrix::column(std::size_t j) const
{
    RatMatrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        c(i, 0) = (*this)(i, j);
    }
    return c;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw Error(Errc::ArityMismatch, "matrix product shape mismatch");
    }
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

RationalVector operator*(const RatMatrix& a, std::span<const Rational> x)
{
    if (a.cols() != x.size()) {
        throw Error(Errc::ArityMismatch, "matrix-vector shape mismatch");
    }
    RationalVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            y[i] += a(i, j) * x[j];
        }
    }
    return y;
}

namespace {

// Augmented integer system [A | B] obtained by scaling each row by the lcm
// of its denominators. Row scaling does not change the solution.
struct IntegerSystem {
    std::size_t n = 0;
    std::size_t rhs = 0;
    std::vector<std::vector<Integer>> rows;
};

IntegerSystem integer_system(const RatMatrix& a, const RatMatrix& b)
{
    IntegerSystem s;
    s.n = a.rows();
    s.rhs = b.cols();
    s.rows.resize(s.n);
    for (std::size_t i = 0; i < s.n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < s.n; ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < s.rhs; ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b(i, j).get_den_mpz_t());
        }
        auto& row = s.rows[i];
        row.reserve(s.n + s.rhs);
        for (std::size_t j = 0; j < s.n; ++j) {
            row.push_back(a(i, j).get_num() * (l / a(i, j).get_den()));
        }
        for (std::size_t j = 0; j < s.rhs; ++j) {
            row.push_back(b(i, j).get_num() * (l / b(i, j).get_den()));
        }
    }
    return s;
}

// Bareiss forward elimination; returns the sign of the row permutation.
// After the call the leading n x n block is upper triangular and the last
// pivot equals the determinant of the scaled system (up to that sign).
int bareiss(IntegerSystem& s)
{
    const std::size_t width = s.n + s.rhs;
    Integer prev = 1;
    int perm_sign = 1;
    for (std::size_t k = 0; k < s.n; ++k) {
        std::size_t pivot = k;
        while (pivot < s.n && s.rows[pivot][k] == 0) {
            ++pivot;
        }
        if (pivot == s.n) {
            throw Error(Errc::SingularMatrix, "zero pivot column " + std::to_string(k));
        }
        if (pivot != k) {
            std::swap(s.rows[pivot], s.rows[k]);
            perm_sign = -perm_sign;
        }
        for (std::size_t i = k + 1; i < s.n; ++i) {
            for (std::size_t j = k + 1; j < width; ++j) {
                Integer t = s.rows[k][k] * s.rows[i][j] - s.rows[i][k] * s.rows[k][j];
                mpz_divexact(s.rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            s.rows[i][k] = 0;
        }
        prev = s.rows[k][k];
    }
    return perm_sign;
}

RatMatrix solve_many(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows() != a.cols()) {
        throw Error(Errc::SingularMatrix, "matrix is not square");
    }
    if (b.rows() != a.rows()) {
        throw Error(Errc::ArityMismatch, "right-hand side height mismatch");
    }
    IntegerSystem s = integer_system(a, b);
    bareiss(s);
    const std::size_t n = s.n;
    RatMatrix x(n, s.rhs);
    for (std::size_t c = 0; c < s.rhs; ++c) {
        for (std::size_t ii = n; ii-- > 0;) {
            Rational acc(s.rows[ii][n + c]);
            for (std::size_t j = ii + 1; j < n; ++j) {
                acc -= Rational(s.rows[ii][j]) * x(j, c);
            }
            x(ii, c) = acc / Rational(s.rows[ii][ii]);
        }
    }
    return x;
}

} // namespace

RationalVector solve_exact(const RatMatrix& a, std::span<const Rational> b)
{
    RatMatrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
        rhs(i, 0) = b[i];
    }
    RatMatrix x = solve_many(a, rhs);
    RationalVector out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        out[i] = x(i, 0);
    }
    return out;
}

RatMatrix invert_exact(const RatMatrix& a)
{
    return solve_many(a, RatMatrix::identity(a.rows()));
}

Rational determinant(const RatMatrix& a)
{
    if (a.rows() != a.cols()) {
        throw Error(Errc::SingularMatrix, "matrix is not square");
    }
    if (a.rows() == 0) {
        return 1;
    }
    RatMatrix none(a.rows(), 0);
    IntegerSystem s = integer_system(a, none);
    Integer scale = 1;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        }
        scale *= l;
    }
    int perm_sign = 1;
    try {
        perm_sign = bareiss(s);
    } catch (const Error& e) {
        if (e.code() == Errc::SingularMatrix) {
            return 0;
        }
        throw;
    }
    return make_rational(perm_sign * s.rows[a.rows() - 1][a.rows() - 1], scale);
}

} // namespace pcert
