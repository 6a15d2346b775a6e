#pragma once

#include "pcert/arith/bigfloat.hpp"

#include <vector>

namespace pcert {

// Bivariate Taylor polynomial in (x, y) truncated at total degree `order`.
class Jet2 {
public:
    Jet2(unsigned order, Precision p);

    static Jet2 constant(unsigned order, const BigFloat& c);
    // x (which = 0) or y (which = 1)
    static Jet2 variable(unsigned order, int which, Precision p);

    unsigned order() const noexcept { return order_; }
    Precision precision() const noexcept { return prec_; }

    // coefficient of x^i y^j, i + j <= order
    BigFloat& at(unsigned i, unsigned j);
    const BigFloat& at(unsigned i, unsigned j) const;
    const BigFloat& constant_term() const { return at(0, 0); }

    Jet2& operator+=(const Jet2& rhs);
    Jet2& operator-=(const Jet2& rhs);
    Jet2& operator*=(const BigFloat& s);

    BigFloat eval(const BigFloat& x, const BigFloat& y) const;

private:
    static std::size_t index(unsigned i, unsigned j) { return (i + j) * (i + j + 1) / 2 + j; }

    unsigned order_;
    Precision prec_;
    std::vector<BigFloat> c_;
};

Jet2 operator+(Jet2 lhs, const Jet2& rhs);
Jet2 operator-(Jet2 lhs, const Jet2& rhs);
Jet2 operator-(const Jet2& x);
Jet2 operator*(const Jet2& lhs, const Jet2& rhs);
Jet2 operator*(Jet2 lhs, const BigFloat& s);
Jet2 operator*(const BigFloat& s, Jet2 rhs);
Jet2 operator+(Jet2 lhs, const BigFloat& s);

// f^(k/3) with the real cube root of the constant term, which must be nonzero.
Jet2 cbrt_power(const Jet2& f, long k);

// Truncated univariate series c[0] + c[1] x + ... + c[n] x^n.
using Series = std::vector<BigFloat>;

Series series_mul(const Series& a, const Series& b);
// f(x, y(x)) truncated at the length of y.
Series compose(const Jet2& f, const Series& x, const Series& y);

} // namespace pcert
