#include "pcert/arith/rational.hpp"

#include "pcert/error.hpp"

#include <cctype>
#include <cstdio>
#include <string>

namespace pcert {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw Error(Errc::ParseError, "zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!is_integer_literal(s)) {
        throw Error(Errc::ParseError, "not an integer: '" + std::string(s) + "'");
    }
    if (s[0] == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

Rational parse_decimal(std::string_view s)
{
    std::string mantissa(s);
    long exponent = 0;
    if (auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
        std::string exp_part = mantissa.substr(e + 1);
        mantissa.resize(e);
        if (!is_integer_literal(exp_part)) {
            throw Error(Errc::ParseError, "bad exponent in '" + std::string(s) + "'");
        }
        exponent = std::stol(exp_part);
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
        negative = mantissa[0] == '-';
        mantissa.erase(0, 1);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char c : mantissa) {
        if (c == '.') {
            if (seen_point) {
                throw Error(Errc::ParseError, "bad decimal '" + std::string(s) + "'");
            }
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) {
                ++frac_digits;
            }
        } else {
            throw Error(Errc::ParseError, "bad decimal '" + std::string(s) + "'");
        }
    }
    if (digits.empty()) {
        throw Error(Errc::ParseError, "bad decimal '" + std::string(s) + "'");
    }
    Integer num(digits, 10);
    if (negative) {
        num = -num;
    }
    long scale = exponent - frac_digits;
    Integer ten(10);
    if (scale >= 0) {
        return Rational(num * pow(ten, static_cast<unsigned>(scale)));
    }
    return make_rational(num, pow(ten, static_cast<unsigned>(-scale)));
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    }
    if (is_integer_literal(text)) {
        return Rational(parse_integer(text));
    }
    return parse_decimal(text);
}

Integer pow(const Integer& base, unsigned exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return r;
}

int sign(const Rational& q) noexcept { return sgn(q); }
int sign(const Integer& z) noexcept { return sgn(z); }

Rational abs(const Rational& q) { return ::abs(q); }

double to_double(const Rational& q) { return q.get_d(); }

std::string to_decimal(const Rational& q, int digits, DecimalRounding mode)
{
    if (q == 0) {
        return "0";
    }
    // Scale to get `digits` significant figures: find k with 10^(k-1) <= |q| < 10^k.
    Rational a = abs(q);
    long k = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
    Integer ten(10);
    auto scaled = [&](long e) {
        return e >= 0 ? Rational(pow(ten, static_cast<unsigned>(e))) : make_rational(Integer(1), pow(ten, static_cast<unsigned>(-e)));
    };
    while (a >= scaled(k)) {
        ++k;
    }
    while (a < scaled(k - 1)) {
        --k;
    }
    Rational shifted = a * scaled(digits - k);
    Integer int_part = shifted.get_num() / shifted.get_den();
    const bool away = (mode == DecimalRounding::Up && sgn(q) > 0) || (mode == DecimalRounding::Down && sgn(q) < 0);
    if (away && Rational(int_part) != shifted) {
        int_part += 1;
    }
    std::string s = int_part.get_str();
    if (static_cast<int>(s.size()) > digits) {
        // carried into a new leading digit; the dropped digit is 0
        s.pop_back();
        ++k;
    }
    while (static_cast<int>(s.size()) < digits) {
        s.insert(s.begin(), '0');
    }
    std::string out;
    if (k <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-k), '0') + s;
    } else if (k >= digits) {
        out = s + std::string(static_cast<std::size_t>(k - digits), '0');
    } else {
        out = s.substr(0, static_cast<std::size_t>(k)) + "." + s.substr(static_cast<std::size_t>(k));
    }
    return sgn(q) < 0 ? "-" + out : out;
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace pcert
