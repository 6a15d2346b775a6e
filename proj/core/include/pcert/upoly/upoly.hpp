#pragma once

#include "pcert/arith/bigfloat.hpp"
#include "pcert/arith/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcert {

// Dense univariate polynomial over Q, coefficients by ascending degree.
// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> ascending);

    static UPoly constant(const Rational& c);
    static UPoly monomial(const Rational& c, unsigned k);
    // x - root
    static UPoly linear_root(const Rational& root);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t k) const;
    const Rational& lc() const;
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    UPoly derivative() const;
    UPoly monic() const;
    // p(x + c)
    UPoly taylor_shift(const Rational& c) const;
    // number of leading zero coefficients, i.e. the power of x dividing p
    unsigned x_valuation() const;
    // p / x^k (requires x^k | p)
    UPoly drop_low(unsigned k) const;

    Rational eval(const Rational& x) const;
    BigFloat eval_float(const BigFloat& x) const;

    UPoly& operator+=(const UPoly& rhs);
    UPoly& operator-=(const UPoly& rhs);
    UPoly& operator*=(const UPoly& rhs);
    UPoly& operator*=(const Rational& c);

    friend bool operator==(const UPoly&, const UPoly&) = default;

    // Degree-descending human form, e.g. "x^2 - 2".
    std::string to_string(std::string_view var = "x") const;
    // Machine form "[c0, c1, ...]" with each ci as "num/den".
    std::string to_coefficient_list() const;
    static UPoly from_coefficient_list(std::string_view text);
    std::uint64_t hash() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

UPoly operator+(UPoly lhs, const UPoly& rhs);
UPoly operator-(UPoly lhs, const UPoly& rhs);
UPoly operator*(const UPoly& lhs, const UPoly& rhs);
UPoly operator*(UPoly lhs, const Rational& c);
UPoly operator*(const Rational& c, UPoly rhs);
UPoly operator-(const UPoly& p);

UPoly pow(const UPoly& p, unsigned k);

// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
// Exact quotient; throws Error(FactorizationMismatch) when b does not divide a.
UPoly divide_exact(const UPoly& a, const UPoly& b);

// Monic gcd (multi-modular with exact verification). gcd(0, 0) throws ZeroPolynomial.
UPoly gcd_poly(const UPoly& p, const UPoly& q);
// p / gcd(p, p'), made primitive with positive leading coefficient.
UPoly squarefree_part(const UPoly& p);

} // namespace pcert
