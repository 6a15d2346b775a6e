#include "pcert/manifold/jet.hpp"

#include "pcert/error.hpp"

namespace pcert {

Jet2::Jet2(unsigned order, Precision p)
    : order_(order), prec_(p), c_(index(0, order) + 1, BigFloat(p, 0L))
{
}

Jet2 Jet2::constant(unsigned order, const BigFloat& c)
{
    Jet2 j(order, c.precision());
    j.at(0, 0) = c;
    return j;
}

Jet2 Jet2::variable(unsigned order, int which, Precision p)
{
    Jet2 j(order, p);
    if (order >= 1) {
        (which == 0 ? j.at(1, 0) : j.at(0, 1)) = BigFloat(p, 1L);
    }
    return j;
}

BigFloat& Jet2::at(unsigned i, unsigned j) { return c_.at(index(i, j)); }

const BigFloat& Jet2::at(unsigned i, unsigned j) const { return c_.at(index(i, j)); }

Jet2& Jet2::operator+=(const Jet2& rhs)
{
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] += rhs.c_.at(k);
    }
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& rhs)
{
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] -= rhs.c_.at(k);
    }
    return *this;
}

Jet2& Jet2::operator*=(const BigFloat& s)
{
    for (auto& c : c_) {
        c *= s;
    }
    return *this;
}

BigFloat Jet2::eval(const BigFloat& x, const BigFloat& y) const
{
    BigFloat out(prec_, 0L);
    BigFloat xi(prec_, 1L);
    for (unsigned i = 0; i <= order_; ++i) {
        BigFloat term(prec_, 0L);
        BigFloat yj(prec_, 1L);
        for (unsigned j = 0; i + j <= order_; ++j) {
            term += at(i, j) * yj;
            yj *= y;
        }
        out += term * xi;
        xi *= x;
    }
    return out;
}

Jet2 operator+(Jet2 lhs, const Jet2& rhs) { return lhs += rhs; }

Jet2 operator-(Jet2 lhs, const Jet2& rhs) { return lhs -= rhs; }

Jet2 operator-(const Jet2& x)
{
    Jet2 out(x.order(), x.precision());
    return out -= x;
}

Jet2 operator*(const Jet2& lhs, const Jet2& rhs)
{
    const unsigned n = lhs.order();
    Jet2 out(n, lhs.precision());
    for (unsigned d1 = 0; d1 <= n; ++d1) {
        for (unsigned j1 = 0; j1 <= d1; ++j1) {
            const BigFloat& a = lhs.at(d1 - j1, j1);
            if (a.is_zero()) {
                continue;
            }
            for (unsigned d2 = 0; d1 + d2 <= n; ++d2) {
                for (unsigned j2 = 0; j2 <= d2; ++j2) {
                    out.at(d1 - j1 + d2 - j2, j1 + j2) += a * rhs.at(d2 - j2, j2);
                }
            }
        }
    }
    return out;
}

Jet2 operator*(Jet2 lhs, const BigFloat& s) { return lhs *= s; }

Jet2 operator*(const BigFloat& s, Jet2 rhs) { return rhs *= s; }

Jet2 operator+(Jet2 lhs, const BigFloat& s)
{
    lhs.at(0, 0) += s;
    return lhs;
}

Jet2 cbrt_power(const Jet2& f, long k)
{
    const BigFloat& c = f.constant_term();
    if (c.is_zero()) {
        throw Error(Errc::DomainExcluded, "fractional power of a jet with zero constant term");
    }
    const Precision p = f.precision();
    const BigFloat root = real_cbrt(c);
    const BigFloat lead = k >= 0 ? pow(root, k) : 1 / pow(root, -k);

    // (1 + h)^alpha with h nilpotent, alpha = k/3.
    Jet2 h = f;
    h.at(0, 0) = BigFloat(p, 0L);
    h *= 1 / c;
    const BigFloat alpha = BigFloat(p, k) / 3;
    Jet2 sum = Jet2::constant(f.order(), BigFloat(p, 1L));
    Jet2 hn = Jet2::constant(f.order(), BigFloat(p, 1L));
    BigFloat binom(p, 1L);
    for (unsigned n = 1; n <= f.order(); ++n) {
        hn = hn * h;
        binom = binom * (alpha - static_cast<long>(n - 1)) / static_cast<long>(n);
        sum += hn * binom;
    }
    return sum * lead;
}

Series series_mul(const Series& a, const Series& b)
{
    const std::size_t n = a.size();
    Series out(n, BigFloat(a.at(0).precision(), 0L));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            out[i + j] += a[i] * b.at(j);
        }
    }
    return out;
}

Series compose(const Jet2& f, const Series& x, const Series& y)
{
    const std::size_t n = y.size();
    const Precision p = f.precision();
    Series one(n, BigFloat(p, 0L));
    one[0] = BigFloat(p, 1L);

    std::vector<Series> ypow{one};
    for (unsigned j = 1; j <= f.order(); ++j) {
        ypow.push_back(series_mul(ypow.back(), y));
    }
    Series out(n, BigFloat(p, 0L));
    Series xi = one;
    for (unsigned i = 0; i <= f.order(); ++i) {
        for (unsigned j = 0; i + j <= f.order(); ++j) {
            const BigFloat& c = f.at(i, j);
            if (c.is_zero()) {
                continue;
            }
            const Series t = series_mul(xi, ypow[j]);
            for (std::size_t k = 0; k < n; ++k) {
                out[k] += c * t[k];
            }
        }
        xi = series_mul(xi, x);
    }
    return out;
}

} // namespace pcert
