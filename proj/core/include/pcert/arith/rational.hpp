#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pcert {

// Exact scalars. mpq_class keeps every arithmetic result in lowest terms with
// a positive denominator; make_rational() canonicalizes raw input.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Canonical "num/den" text (base 10); integers are written as "num/1".
std::string to_string(const Rational& q);

// Accepts "num/den", "num", and plain decimals such as "-1.25" or "1e-20".
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

int sign(const Rational& q) noexcept;
int sign(const Integer& z) noexcept;

Rational abs(const Rational& q);
double to_double(const Rational& q);

enum class DecimalRounding { TowardZero, Down, Up };

// Decimal preview with `digits` significant digits. Down/Up give a decimal
// that is a lower/upper bound of q.
std::string to_decimal(const Rational& q, int digits, DecimalRounding mode = DecimalRounding::TowardZero);

// 64-bit FNV-1a of a byte string; used for cache keys and certificate hashes.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;
std::string hex64(std::uint64_t h);

using RationalVector = std::vector<Rational>;

} // namespace pcert
