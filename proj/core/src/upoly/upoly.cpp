#include "pcert/upoly/upoly.hpp"

#include "pcert/error.hpp"
#include "pcert/upoly/zpoly.hpp"

#include <sstream>

namespace pcert {

UPoly::UPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending))
{
    trim();
}

void UPoly::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

UPoly UPoly::constant(const Rational& c)
{
    return UPoly(std::vector<Rational>{c});
}

UPoly UPoly::monomial(const Rational& c, unsigned k)
{
    std::vector<Rational> cs(k + 1, Rational(0));
    cs[k] = c;
    return UPoly(std::move(cs));
}

UPoly UPoly::linear_root(const Rational& root)
{
    return UPoly(std::vector<Rational>{-root, Rational(1)});
}

Rational UPoly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& UPoly::lc() const
{
    if (coeffs_.empty()) {
        throw Error(Errc::ZeroPolynomial, "leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

UPoly UPoly::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * static_cast<long>(i);
    }
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const
{
    if (is_zero()) {
        throw Error(Errc::ZeroPolynomial, "monic of the zero polynomial");
    }
    UPoly r = *this;
    const Rational inv = 1 / lc();
    for (auto& c : r.coeffs_) {
        c *= inv;
    }
    return r;
}

UPoly UPoly::taylor_shift(const Rational& c) const
{
    std::vector<Rational> p = coeffs_;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) {
            p[j] += c * p[j + 1];
        }
    }
    return UPoly(std::move(p));
}

unsigned UPoly::x_valuation() const
{
    unsigned k = 0;
    while (k < coeffs_.size() && sgn(coeffs_[k]) == 0) {
        ++k;
    }
    return k;
}

UPoly UPoly::drop_low(unsigned k) const
{
    if (k > x_valuation() && !is_zero()) {
        throw Error(Errc::FactorizationMismatch, "x^" + std::to_string(k) + " does not divide the polynomial");
    }
    if (is_zero()) {
        return {};
    }
    return UPoly(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Rational UPoly::eval(const Rational& x) const
{
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

BigFloat UPoly::eval_float(const BigFloat& x) const
{
    const Precision prec = x.precision();
    BigFloat acc(prec, 0L);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += BigFloat(prec, coeffs_[i]);
    }
    return acc;
}

UPoly& UPoly::operator+=(const UPoly& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& rhs)
{
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            r[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) {
        x *= c;
    }
    trim();
    return *this;
}

std::string UPoly::to_string(std::string_view var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                out << "-";
            }
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || k == 0) {
            out << mag.get_str();
        }
        if (k > 0) {
            if (!unit) {
                out << "*";
            }
            out << var;
            if (k > 1) {
                out << "^" << k;
            }
        }
    }
    return out.str();
}

std::string UPoly::to_coefficient_list() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) {
            s += ", ";
        }
        s += pcert::to_string(coeffs_[i]);
    }
    s += "]";
    return s;
}

UPoly UPoly::from_coefficient_list(std::string_view text)
{
    auto strip = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\n' || v.front() == '\t')) {
            v.remove_prefix(1);
        }
        while (!v.empty() && (v.back() == ' ' || v.back() == '\n' || v.back() == '\t')) {
            v.remove_suffix(1);
        }
        return v;
    };
    text = strip(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw Error(Errc::ParseError, "coefficient list must be bracketed");
    }
    text = strip(text.substr(1, text.size() - 2));
    std::vector<Rational> cs;
    while (!text.empty()) {
        const auto comma = text.find(',');
        cs.push_back(parse_rational(strip(text.substr(0, comma))));
        if (comma == std::string_view::npos) {
            break;
        }
        text = text.substr(comma + 1);
    }
    return UPoly(std::move(cs));
}

std::uint64_t UPoly::hash() const
{
    return fnv1a64(to_coefficient_list());
}

UPoly operator+(UPoly lhs, const UPoly& rhs)
{
    lhs += rhs;
    return lhs;
}

UPoly operator-(UPoly lhs, const UPoly& rhs)
{
    lhs -= rhs;
    return lhs;
}

UPoly operator*(const UPoly& lhs, const UPoly& rhs)
{
    UPoly r = lhs;
    r *= rhs;
    return r;
}

UPoly operator*(UPoly lhs, const Rational& c)
{
    lhs *= c;
    return lhs;
}

UPoly operator*(const Rational& c, UPoly rhs)
{
    rhs *= c;
    return rhs;
}

UPoly operator-(const UPoly& p)
{
    return p * Rational(-1);
}

UPoly pow(const UPoly& p, unsigned k)
{
    UPoly result = UPoly::constant(1);
    UPoly base = p;
    while (k) {
        if (k & 1) {
            result *= base;
        }
        k >>= 1;
        if (k) {
            base *= base;
        }
    }
    return result;
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b)
{
    if (b.is_zero()) {
        throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
    }
    const int db = b.degree();
    std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
    if (a.degree() < db) {
        return {UPoly{}, a};
    }
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational inv = 1 / b.lc();
    const auto bc = b.coeffs();
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rational qk = r[static_cast<std::size_t>(k + db)] * inv;
        if (sgn(qk) == 0) {
            continue;
        }
        for (int i = 0; i <= db; ++i) {
            r[static_cast<std::size_t>(k + i)] -= qk * bc[static_cast<std::size_t>(i)];
        }
        q[static_cast<std::size_t>(k)] = qk;
    }
    r.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly divide_exact(const UPoly& a, const UPoly& b)
{
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) {
        throw Error(Errc::FactorizationMismatch, "divisor does not divide exactly");
    }
    return q;
}

UPoly gcd_poly(const UPoly& p, const UPoly& q)
{
    if (p.is_zero() && q.is_zero()) {
        throw Error(Errc::ZeroPolynomial, "gcd of two zero polynomials");
    }
    const ZPoly g = zpoly::gcd(zpoly::from_upoly(p), zpoly::from_upoly(q));
    return zpoly::to_upoly(g).monic();
}

UPoly squarefree_part(const UPoly& p)
{
    if (p.is_zero()) {
        throw Error(Errc::ZeroPolynomial, "squarefree part of the zero polynomial");
    }
    const ZPoly z = zpoly::from_upoly(p);
    if (zpoly::degree(z) <= 0) {
        return UPoly::constant(1);
    }
    const ZPoly g = zpoly::gcd(z, zpoly::derivative(z));
    auto q = zpoly::divide_exact(z, g);
    if (!q) {
        throw Error(Errc::FactorizationMismatch, "gcd(p, p') does not divide p");
    }
    ZPoly s = zpoly::primitive(std::move(*q));
    if (sgn(s.back()) < 0) {
        for (auto& c : s) {
            c = -c;
        }
    }
    return zpoly::to_upoly(s);
}

} // namespace pcert
