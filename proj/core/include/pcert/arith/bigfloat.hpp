#pragma once

#include "pcert/arith/rational.hpp"

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace pcert {

// Working precision in decimal digits. Every BigFloat carries its own
// precision; binary operations produce the larger of the two operands'.
struct Precision {
    unsigned digits = 60;

    mpfr_prec_t bits() const noexcept;
    friend bool operator==(Precision, Precision) = default;
};

inline constexpr Precision kDefaultPrecision{60};

class BigFloat {
public:
    explicit BigFloat(Precision p);
    BigFloat(Precision p, long value);
    BigFloat(Precision p, double value);
    BigFloat(Precision p, const Rational& value);
    BigFloat(Precision p, std::string_view decimal);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    Precision precision() const noexcept { return prec_; }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_ptr get() noexcept { return value_; }

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    double to_double() const;
    // Exact value of the binary float as a rational.
    Rational to_rational() const;
    // Scientific notation with `digits` significant digits (default: the precision).
    std::string to_string(int digits = 0) const;
    // Serialized form "<decimal>@<digits>" carrying the precision annotation.
    std::string serialize() const;
    static BigFloat deserialize(std::string_view text);

    bool is_zero() const noexcept;
    bool is_finite() const noexcept;
    int sign() const noexcept;

private:
    Precision prec_;
    mpfr_t value_;
};

BigFloat operator+(BigFloat lhs, const BigFloat& rhs);
BigFloat operator-(BigFloat lhs, const BigFloat& rhs);
BigFloat operator*(BigFloat lhs, const BigFloat& rhs);
BigFloat operator/(BigFloat lhs, const BigFloat& rhs);
BigFloat operator-(const BigFloat& x);

BigFloat operator+(const BigFloat& lhs, long rhs);
BigFloat operator-(const BigFloat& lhs, long rhs);
BigFloat operator*(const BigFloat& lhs, long rhs);
BigFloat operator/(const BigFloat& lhs, long rhs);
BigFloat operator+(long lhs, const BigFloat& rhs);
BigFloat operator-(long lhs, const BigFloat& rhs);
BigFloat operator*(long lhs, const BigFloat& rhs);
BigFloat operator/(long lhs, const BigFloat& rhs);

std::partial_ordering operator<=>(const BigFloat& lhs, const BigFloat& rhs);
bool operator==(const BigFloat& lhs, const BigFloat& rhs);
std::partial_ordering operator<=>(const BigFloat& lhs, long rhs);
bool operator==(const BigFloat& lhs, long rhs);

// Real (sign-preserving) cube root: real_cbrt(-x) == -real_cbrt(x).
BigFloat real_cbrt(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat pow(const BigFloat& x, long n);
BigFloat pi(Precision p);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat max(const BigFloat& a, const BigFloat& b);
// 10^e at the given precision.
BigFloat pow10(Precision p, long e);

} // namespace pcert
