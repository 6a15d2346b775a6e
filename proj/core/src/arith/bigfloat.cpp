#include "pcert/arith/bigfloat.hpp"

#include "pcert/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace pcert {

mpfr_prec_t Precision::bits() const noexcept
{
    // log2(10) ~ 3.3219; a few guard bits on top.
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.32192809488736234787)) + 16;
}

BigFloat::BigFloat(Precision p) : prec_(p)
{
    mpfr_init2(value_, p.bits());
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(Precision p, long value) : prec_(p)
{
    mpfr_init2(value_, p.bits());
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(Precision p, double value) : prec_(p)
{
    mpfr_init2(value_, p.bits());
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(Precision p, const Rational& value) : prec_(p)
{
    mpfr_init2(value_, p.bits());
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(Precision p, std::string_view decimal) : prec_(p)
{
    mpfr_init2(value_, p.bits());
    std::string s(decimal);
    if (mpfr_set_str(value_, s.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(value_);
        throw Error(Errc::ParseError, "bad float literal '" + s + "'");
    }
}

BigFloat::BigFloat(const BigFloat& other) : prec_(other.prec_)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : prec_(other.prec_)
{
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other)
{
    if (this != &other) {
        prec_ = other.prec_;
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    std::swap(prec_, other.prec_);
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

namespace {

// Widen `target` in place when the other operand carries more precision.
void widen(BigFloat& target, const BigFloat& other)
{
    if (other.precision().digits > target.precision().digits) {
        BigFloat wide(other.precision());
        mpfr_set(wide.get(), target.get(), MPFR_RNDN);
        target = std::move(wide);
    }
}

} // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs)
{
    widen(*this, rhs);
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs)
{
    widen(*this, rhs);
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs)
{
    widen(*this, rhs);
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs)
{
    widen(*this, rhs);
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

Rational BigFloat::to_rational() const
{
    if (!mpfr_number_p(value_)) {
        throw Error(Errc::ParseError, "non-finite value has no rational form");
    }
    Rational q;
    mpfr_get_q(q.get_mpq_t(), value_);
    return q;
}

std::string BigFloat::to_string(int digits) const
{
    if (digits <= 0) {
        digits = static_cast<int>(prec_.digits);
    }
    if (mpfr_zero_p(value_)) {
        return "0";
    }
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits - 1) + "Re";
    mpfr_asprintf(&buf, fmt.c_str(), value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

std::string BigFloat::serialize() const
{
    return to_string(static_cast<int>(prec_.digits) + 5) + "@" + std::to_string(prec_.digits);
}

BigFloat BigFloat::deserialize(std::string_view text)
{
    auto at = text.rfind('@');
    if (at == std::string_view::npos) {
        throw Error(Errc::ParseError, "missing precision annotation in '" + std::string(text) + "'");
    }
    unsigned digits = static_cast<unsigned>(std::stoul(std::string(text.substr(at + 1))));
    return BigFloat(Precision{digits}, text.substr(0, at));
}

bool BigFloat::is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
bool BigFloat::is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
int BigFloat::sign() const noexcept { return mpfr_sgn(value_); }

BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

BigFloat operator-(const BigFloat& x)
{
    BigFloat r(x.precision());
    mpfr_neg(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& lhs, long rhs)
{
    BigFloat r(lhs.precision());
    mpfr_add_si(r.get(), lhs.get(), rhs, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& lhs, long rhs)
{
    BigFloat r(lhs.precision());
    mpfr_sub_si(r.get(), lhs.get(), rhs, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& lhs, long rhs)
{
    BigFloat r(lhs.precision());
    mpfr_mul_si(r.get(), lhs.get(), rhs, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& lhs, long rhs)
{
    BigFloat r(lhs.precision());
    mpfr_div_si(r.get(), lhs.get(), rhs, MPFR_RNDN);
    return r;
}

BigFloat operator+(long lhs, const BigFloat& rhs) { return rhs + lhs; }

BigFloat operator-(long lhs, const BigFloat& rhs)
{
    BigFloat r(rhs.precision());
    mpfr_si_sub(r.get(), lhs, rhs.get(), MPFR_RNDN);
    return r;
}

BigFloat operator*(long lhs, const BigFloat& rhs) { return rhs * lhs; }

BigFloat operator/(long lhs, const BigFloat& rhs)
{
    BigFloat r(rhs.precision());
    mpfr_si_div(r.get(), lhs, rhs.get(), MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat& lhs, const BigFloat& rhs)
{
    if (mpfr_unordered_p(lhs.get(), rhs.get())) {
        return std::partial_ordering::unordered;
    }
    int c = mpfr_cmp(lhs.get(), rhs.get());
    return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

bool operator==(const BigFloat& lhs, const BigFloat& rhs) { return mpfr_equal_p(lhs.get(), rhs.get()) != 0; }

std::partial_ordering operator<=>(const BigFloat& lhs, long rhs)
{
    if (mpfr_nan_p(lhs.get())) {
        return std::partial_ordering::unordered;
    }
    int c = mpfr_cmp_si(lhs.get(), rhs);
    return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

bool operator==(const BigFloat& lhs, long rhs) { return !mpfr_nan_p(lhs.get()) && mpfr_cmp_si(lhs.get(), rhs) == 0; }

BigFloat real_cbrt(const BigFloat& x)
{
    BigFloat r(x.precision());
    mpfr_cbrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

#define PCERT_UNARY(name, fn)                  \
    BigFloat name(const BigFloat& x)           \
    {                                          \
        BigFloat r(x.precision());             \
        fn(r.get(), x.get(), MPFR_RNDN);       \
        return r;                              \
    }

PCERT_UNARY(sqrt, mpfr_sqrt)
PCERT_UNARY(abs, mpfr_abs)
PCERT_UNARY(exp, mpfr_exp)
PCERT_UNARY(log, mpfr_log)
PCERT_UNARY(sinh, mpfr_sinh)
PCERT_UNARY(cosh, mpfr_cosh)

#undef PCERT_UNARY

BigFloat pow(const BigFloat& x, long n)
{
    BigFloat r(x.precision());
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

BigFloat pi(Precision p)
{
    BigFloat r(p);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

BigFloat min(const BigFloat& a, const BigFloat& b) { return (a <= b) ? a : b; }
BigFloat max(const BigFloat& a, const BigFloat& b) { return (a >= b) ? a : b; }

BigFloat pow10(Precision p, long e)
{
    BigFloat ten(p, 10L);
    return pow(ten, e);
}

} // namespace pcert
