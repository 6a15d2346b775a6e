#pragma once

#include "pcert/arith/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pcert {

// Dense exact matrix, row-major.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix column(std::size_t j) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RationalVector operator*(const RatMatrix& a, std::span<const Rational> x);

// Fraction-free (Bareiss) elimination on the integer-scaled system.
// Throws Error(SingularMatrix) when A is singular.
RationalVector solve_exact(const RatMatrix& a, std::span<const Rational> b);
RatMatrix invert_exact(const RatMatrix& a);
Rational determinant(const RatMatrix& a);

} // namespace pcert
