#pragma once

#include "pcert/arith/rational.hpp"
#include "pcert/upoly/zpoly.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pcert::modp {

using u64 = std::uint64_t;

// Arithmetic in Z/pZ for an odd prime p < 2^62.
struct Field {
    u64 p;

    u64 add(u64 a, u64 b) const noexcept
    {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p - b; }
    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p - a; }
    u64 mul(u64 a, u64 b) const noexcept
    {
        return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
    }
    u64 pow(u64 a, u64 e) const noexcept;
    u64 inv(u64 a) const;
    u64 reduce(const Integer& z) const;
    u64 reduce(long v) const noexcept;
};

bool is_prime(u64 n) noexcept;

// Deterministic stream of distinct primes descending from 2^62.
class PrimeStream {
public:
    u64 next();

private:
    u64 cursor_ = (u64{1} << 62) + 1;
};

using PolyP = std::vector<u64>;

void trim(PolyP& p);
inline int degree(const PolyP& p) { return static_cast<int>(p.size()) - 1; }
PolyP reduce(const ZPoly& p, const Field& f);
u64 eval(const PolyP& p, u64 x, const Field& f) noexcept;
PolyP rem(PolyP a, const PolyP& b, const Field& f);
PolyP gcd_monic(PolyP a, PolyP b, const Field& f);
// Resultant of the trimmed polynomials (true degrees).
u64 resultant(PolyP a, PolyP b, const Field& f);
// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
PolyP interpolate(std::span<const u64> xs, std::span<const u64> ys, const Field& f);
// Interpolation through (i, ys[i]), i = 0..n-1; one inversion per level.
PolyP interpolate_consecutive(std::span<const u64> ys, const Field& f);

// Incremental Chinese remaindering of a vector of integers.
class Crt {
public:
    explicit Crt(std::size_t size) : values_(size) {}

    void add(u64 prime, std::span<const u64> residues);
    const Integer& modulus() const noexcept { return modulus_; }
    std::size_t primes_used() const noexcept { return count_; }
    // Representatives in (-M/2, M/2].
    std::vector<Integer> symmetric() const;

private:
    Integer modulus_ = 1;
    std::size_t count_ = 0;
    std::vector<Integer> values_;
};

} // namespace pcert::modp
