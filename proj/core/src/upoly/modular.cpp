#include "pcert/upoly/modular.hpp"

#include "pcert/error.hpp"

#include <utility>

namespace pcert::modp {

u64 Field::pow(u64 a, u64 e) const noexcept
{
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 Field::inv(u64 a) const
{
    if (a % p == 0) {
        throw Error(Errc::SingularMatrix, "inverse of zero modulo p");
    }
    return pow(a, p - 2);
}

u64 Field::reduce(const Integer& z) const
{
    return mpz_fdiv_ui(z.get_mpz_t(), p);
}

u64 Field::reduce(long v) const noexcept
{
    long r = v % static_cast<long>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<long>(p) : r);
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m); }

u64 powmod(u64 a, u64 e, u64 m)
{
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(u64 n) noexcept
{
    if (n < 2) {
        return false;
    }
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) {
            return n == small;
        }
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all n < 2^64.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

u64 PrimeStream::next()
{
    do {
        cursor_ -= 2;
    } while (!is_prime(cursor_));
    return cursor_;
}

void trim(PolyP& p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

PolyP reduce(const ZPoly& p, const Field& f)
{
    PolyP r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] = f.reduce(p[i]);
    }
    trim(r);
    return r;
}

u64 eval(const PolyP& p, u64 x, const Field& f) noexcept
{
    u64 acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = f.add(f.mul(acc, x), p[i]);
    }
    return acc;
}

PolyP rem(PolyP a, const PolyP& b, const Field& f)
{
    const int db = degree(b);
    if (db < 0) {
        throw Error(Errc::ZeroPolynomial, "division by zero polynomial mod p");
    }
    const u64 inv_lc = f.inv(b.back());
    while (degree(a) >= db) {
        const int shift = degree(a) - db;
        const u64 factor = f.mul(a.back(), inv_lc);
        for (int i = 0; i <= db; ++i) {
            a[static_cast<std::size_t>(i + shift)] = f.sub(a[static_cast<std::size_t>(i + shift)], f.mul(factor, b[static_cast<std::size_t>(i)]));
        }
        trim(a);
    }
    return a;
}

PolyP gcd_monic(PolyP a, PolyP b, const Field& f)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyP r = rem(std::move(a), b, f);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const u64 inv_lc = f.inv(a.back());
        for (auto& c : a) {
            c = f.mul(c, inv_lc);
        }
    }
    return a;
}

u64 resultant(PolyP a, PolyP b, const Field& f)
{
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) {
        return 0;
    }
    u64 acc = 1;
    while (true) {
        const int da = degree(a);
        const int db = degree(b);
        if (db == 0) {
            return f.mul(acc, f.pow(b[0], static_cast<u64>(da)));
        }
        if (da == 0) {
            return f.mul(acc, f.pow(a[0], static_cast<u64>(db)));
        }
        if (da < db) {
            // Res(a,b) = (-1)^(da*db) Res(b,a)
            if ((da & 1) && (db & 1)) {
                acc = f.neg(acc);
            }
            std::swap(a, b);
            continue;
        }
        PolyP r = rem(a, b, f);
        if (r.empty()) {
            return 0;
        }
        // Res(a,b) = (-1)^(da*db) lc(b)^(da - dr) Res(b, r)
        const int dr = degree(r);
        if ((da & 1) && (db & 1)) {
            acc = f.neg(acc);
        }
        acc = f.mul(acc, f.pow(b.back(), static_cast<u64>(da - dr)));
        a = std::move(b);
        b = std::move(r);
    }
}

PolyP interpolate(std::span<const u64> xs, std::span<const u64> ys, const Field& f)
{
    const std::size_t n = xs.size();
    std::vector<u64> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const u64 num = f.sub(dd[i], dd[i - 1]);
            const u64 den = f.sub(xs[i], xs[i - level]);
            dd[i] = f.mul(num, f.inv(den));
        }
    }
    // Horner on the Newton form.
    PolyP poly{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        // poly = poly * (x - xs[k]) + dd[k]
        PolyP next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = f.add(next[i + 1], poly[i]);
            next[i] = f.sub(next[i], f.mul(poly[i], xs[k]));
        }
        next[0] = f.add(next[0], dd[k]);
        poly = std::move(next);
    }
    trim(poly);
    return poly;
}

PolyP interpolate_consecutive(std::span<const u64> ys, const Field& f)
{
    const std::size_t n = ys.size();
    if (n == 0) {
        return {};
    }
    std::vector<u64> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level) {
        const u64 inv = f.inv(level);
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = f.mul(f.sub(dd[i], dd[i - 1]), inv);
        }
    }
    PolyP poly(n, 0);
    poly[0] = dd[n - 1];
    std::size_t len = 1;
    for (std::size_t k = n - 1; k-- > 0;) {
        // poly = poly * (x - k) + dd[k]
        for (std::size_t i = len; i > 0; --i) {
            poly[i] = f.sub(poly[i - 1], f.mul(poly[i], k));
        }
        poly[0] = f.add(f.neg(f.mul(poly[0], k)), dd[k]);
        ++len;
    }
    trim(poly);
    return poly;
}

void Crt::add(u64 prime, std::span<const u64> residues)
{
    if (residues.size() != values_.size()) {
        throw Error(Errc::ArityMismatch, "CRT residue vector size mismatch");
    }
    const Field f{prime};
    if (count_ == 0) {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            values_[i] = static_cast<unsigned long>(residues[i]);
        }
        modulus_ = static_cast<unsigned long>(prime);
        count_ = 1;
        return;
    }
    const u64 m_mod_p = f.reduce(modulus_);
    const u64 m_inv = f.inv(m_mod_p);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const u64 current = f.reduce(values_[i]);
        const u64 delta = f.mul(f.sub(residues[i], current), m_inv);
        if (delta != 0) {
            mpz_addmul_ui(values_[i].get_mpz_t(), modulus_.get_mpz_t(), delta);
        }
    }
    mpz_mul_ui(modulus_.get_mpz_t(), modulus_.get_mpz_t(), prime);
    ++count_;
}

std::vector<Integer> Crt::symmetric() const
{
    Integer half = modulus_ / 2;
    std::vector<Integer> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        out[i] = values_[i] > half ? Integer(values_[i] - modulus_) : values_[i];
    }
    return out;
}

} // namespace pcert::modp
