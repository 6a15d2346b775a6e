#include "pcert/upoly/roots.hpp"

#include "pcert/error.hpp"
#include "pcert/upoly/zpoly.hpp"

#include <algorithm>
#include <functional>

namespace pcert {

std::vector<UPoly> sturm_sequence(const UPoly& p)
{
    if (p.is_zero()) {
        throw Error(Errc::ZeroPolynomial, "Sturm sequence of the zero polynomial");
    }
    std::vector<UPoly> chain{p};
    UPoly d = p.derivative();
    if (d.is_zero()) {
        return chain;
    }
    chain.push_back(std::move(d));
    for (;;) {
        auto [q, r] = divrem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) {
            break;
        }
        chain.push_back(-r);
    }
    return chain;
}

int sturm_variations(const std::vector<UPoly>& chain, const Rational& x)
{
    int count = 0;
    int last = 0;
    for (const auto& f : chain) {
        const int s = sgn(f.eval(x));
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++count;
        }
        last = s;
    }
    return count;
}

namespace {

ZPoly squarefree_z(const UPoly& p)
{
    return zpoly::from_upoly(squarefree_part(p));
}

// Sturm chain over Z: each element is a positive multiple of the textbook one.
std::vector<ZPoly> sturm_chain_z(const ZPoly& p)
{
    std::vector<ZPoly> chain{p};
    ZPoly d = zpoly::primitive(zpoly::derivative(p));
    if (d.empty()) {
        return chain;
    }
    chain.push_back(std::move(d));
    for (;;) {
        const ZPoly& a = chain[chain.size() - 2];
        const ZPoly& b = chain.back();
        ZPoly r = zpoly::pseudo_remainder(a, b);
        if (r.empty()) {
            break;
        }
        // prem = lc(b)^(da-db+1) rem; undo a negative factor.
        const int e = zpoly::degree(a) - zpoly::degree(b) + 1;
        const bool flip = sgn(b.back()) < 0 && (e % 2 != 0);
        r = zpoly::primitive(std::move(r));
        if (!flip) {
            for (auto& c : r) {
                c = -c;
            }
        }
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations_z(const std::vector<ZPoly>& chain, const Rational& x)
{
    int count = 0;
    int last = 0;
    for (const auto& f : chain) {
        const int s = zpoly::sign_at(f, x);
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++count;
        }
        last = s;
    }
    return count;
}

// Descartes bisection on (lo, hi) for a squarefree integer polynomial.
// Reports open sub-intervals with exactly one root and exact dyadic roots.
class DescartesEngine {
public:
    using IntervalSink = std::function<void(const Interval&)>;
    using PointSink = std::function<void(const Rational&)>;

    DescartesEngine(const ZPoly& s, Rational lo, Rational hi) : lo_(std::move(lo)), width_(hi - lo_)
    {
        // s(lo + width * t) as an integer polynomial in t, via y = D x.
        const Integer den = lcm_den(lo_, hi);
        const Integer L = Integer(lo_ * den);
        const Integer H = Integer(hi * den);
        const int d = zpoly::degree(s);
        ZPoly p1(s.size());
        Integer dpow = 1;
        for (int i = d; i >= 0; --i) {
            p1[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i)] * dpow;
            dpow *= den;
        }
        p1 = zpoly::taylor_shift(std::move(p1), L);
        root_ = zpoly::primitive(zpoly::scale_variable(std::move(p1), H - L));
    }

    void run(const IntervalSink& on_interval, const PointSink& on_point) const
    {
        struct Node {
            ZPoly poly;
            Integer c;
            unsigned k;
        };
        std::vector<Node> stack;
        stack.push_back({root_, 0, 0});
        while (!stack.empty()) {
            Node node = std::move(stack.back());
            stack.pop_back();
            const int v = descartes_bound(node.poly);
            if (v == 0) {
                continue;
            }
            if (v == 1) {
                on_interval(Interval(to_original(node.c, node.k), to_original(node.c + 1, node.k)));
                continue;
            }
            // Left half: 2^d p(x/2); right half: left shifted by one.
            const int d = zpoly::degree(node.poly);
            ZPoly left = node.poly;
            for (int i = 0; i <= d; ++i) {
                mpz_mul_2exp(left[static_cast<std::size_t>(i)].get_mpz_t(), left[static_cast<std::size_t>(i)].get_mpz_t(), static_cast<mp_bitcnt_t>(d - i));
            }
            ZPoly right = left;
            zpoly::taylor_shift_one(right);
            const Integer cm = 2 * node.c + 1;
            if (sgn(right.front()) == 0) {
                on_point(to_original(cm, node.k + 1));
                right.erase(right.begin());
            }
            stack.push_back({zpoly::primitive(std::move(right)), cm, node.k + 1});
            stack.push_back({zpoly::primitive(std::move(left)), 2 * node.c, node.k + 1});
        }
    }

private:
    static Integer lcm_den(const Rational& a, const Rational& b)
    {
        Integer l;
        mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
        return l;
    }

    // Sign variations of (1+t)^d p(1/(1+t)): bounds the roots in (0, 1).
    static int descartes_bound(const ZPoly& p)
    {
        ZPoly q = zpoly::reversed(p);
        zpoly::taylor_shift_one(q);
        return zpoly::sign_variations(q);
    }

    Rational to_original(const Integer& c, unsigned k) const
    {
        Rational t(c);
        t /= Rational(pow(Integer(2), k));
        return lo_ + width_ * t;
    }

    Rational lo_;
    Rational width_;
    ZPoly root_;
};

int open_count_sturm(const ZPoly& s, const Rational& lo, const Rational& hi)
{
    const auto chain = sturm_chain_z(s);
    // For squarefree s, V(a) - V(b) counts roots in (a, b].
    int n = variations_z(chain, lo) - variations_z(chain, hi);
    if (zpoly::sign_at(s, hi) == 0) {
        --n;
    }
    return n;
}

int open_count_descartes(const ZPoly& s, const Rational& lo, const Rational& hi)
{
    int n = 0;
    DescartesEngine(s, lo, hi).run([&](const Interval&) { ++n; }, [&](const Rational&) { ++n; });
    return n;
}

// Sign of s just to the right of x (x may be a simple root).
int sign_right_of(const ZPoly& s, const Rational& x)
{
    const int v = zpoly::sign_at(s, x);
    return v != 0 ? v : zpoly::sign_at(zpoly::derivative(s), x);
}

Interval refine_z(const ZPoly& s, Interval iv, const Rational& max_width)
{
    const int left_sign = sign_right_of(s, iv.lo);
    auto end_is_root = [&](const Rational& x) { return zpoly::sign_at(s, x) == 0; };
    while (iv.width() > max_width || end_is_root(iv.lo) || end_is_root(iv.hi)) {
        const Rational m = iv.midpoint();
        const int sm = zpoly::sign_at(s, m);
        if (sm == 0) {
            return Interval::point(m);
        }
        if (sm == left_sign) {
            iv.lo = m;
        } else {
            iv.hi = m;
        }
    }
    return iv;
}

void sturm_bisect(const ZPoly& s, const Rational& bound, std::vector<Interval>& out, std::vector<Rational>& exact)
{
    const auto chain = sturm_chain_z(s);
    struct Item {
        Rational a, b;
        int va, vb;
        bool b_root;
    };
    const Rational lo = -bound;
    const Rational hi = bound;
    std::vector<Item> stack{{lo, hi, variations_z(chain, lo), variations_z(chain, hi), false}};
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        const int n = it.va - it.vb - (it.b_root ? 1 : 0);
        if (n == 0) {
            continue;
        }
        if (n == 1) {
            out.emplace_back(it.a, it.b);
            continue;
        }
        const Rational m = (it.a + it.b) / 2;
        const int vm = variations_z(chain, m);
        const bool m_root = zpoly::sign_at(s, m) == 0;
        if (m_root) {
            exact.push_back(m);
        }
        stack.push_back({m, it.b, vm, it.vb, it.b_root});
        stack.push_back({it.a, m, it.va, vm, m_root});
    }
}

} // namespace

int count_roots(const UPoly& p, const Rational& lo, const Rational& hi, EndpointPolicy policy, IsolationMethod method)
{
    if (p.is_zero()) {
        throw Error(Errc::ZeroPolynomial, "count_roots of the zero polynomial");
    }
    if (!(lo < hi)) {
        throw Error(Errc::DomainExcluded, "count_roots needs lo < hi");
    }
    if (policy == EndpointPolicy::Throw && (sgn(p.eval(lo)) == 0 || sgn(p.eval(hi)) == 0)) {
        throw Error(Errc::EndpointIsRoot, "endpoint of (" + to_string(lo) + ", " + to_string(hi) + ") is a root");
    }
    const ZPoly s = squarefree_z(p);
    if (zpoly::degree(s) <= 0) {
        return 0;
    }
    const bool sturm = method == IsolationMethod::Sturm ||
                       (method == IsolationMethod::Auto && zpoly::degree(s) <= kSturmDegreeLimit);
    return sturm ? open_count_sturm(s, lo, hi) : open_count_descartes(s, lo, hi);
}

std::vector<Interval> RootIsolation::all_sorted() const
{
    std::vector<Interval> all = intervals;
    for (const auto& r : exact_roots) {
        all.push_back(Interval::point(r));
    }
    std::sort(all.begin(), all.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return all;
}

Rational root_bound(const UPoly& p)
{
    if (p.is_zero()) {
        throw Error(Errc::ZeroPolynomial, "root bound of the zero polynomial");
    }
    // Fujiwara: |x| <= 2 max(|a_{n-i}/a_n|^{1/i}, |a_0/(2 a_n)|^{1/n}).
    // Find the least k >= 0 with every term <= 2^(k-1), checked exactly.
    const ZPoly z = zpoly::from_upoly(p);
    const int n = zpoly::degree(z);
    const Integer lc = abs(z.back());
    auto fits = [&](long k) {
        for (int i = 1; i <= n; ++i) {
            Integer a = abs(z[static_cast<std::size_t>(n - i)]);
            Integer rhs = lc;
            const long e = (k - 1) * i + (i == n ? 1 : 0);
            if (e >= 0) {
                mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
            } else {
                mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
            }
            if (a > rhs) {
                return false;
            }
        }
        return true;
    };
    long k = 0;
    while (!fits(k)) {
        ++k;
    }
    // Strict inequality |x| < bound.
    Integer b = 1;
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(k + 1));
    return Rational(b);
}

RootIsolation isolate_roots(const UPoly& p, const Rational& max_width, IsolationMethod method)
{
    if (p.is_zero()) {
        throw Error(Errc::ZeroPolynomial, "isolate_roots of the zero polynomial");
    }
    if (sgn(max_width) <= 0) {
        throw Error(Errc::DomainExcluded, "isolate_roots needs max_width > 0");
    }
    RootIsolation result;
    const ZPoly s = squarefree_z(p);
    if (zpoly::degree(s) <= 0) {
        return result;
    }
    if (method == IsolationMethod::Auto) {
        method = zpoly::degree(s) <= kSturmDegreeLimit ? IsolationMethod::Sturm : IsolationMethod::Descartes;
    }
    const Rational bound = root_bound(zpoly::to_upoly(s));
    std::vector<Interval> coarse;
    if (method == IsolationMethod::Sturm) {
        sturm_bisect(s, bound, coarse, result.exact_roots);
    } else {
        DescartesEngine(s, -bound, bound)
            .run([&](const Interval& iv) { coarse.push_back(iv); },
                 [&](const Rational& r) { result.exact_roots.push_back(r); });
    }
    for (auto& iv : coarse) {
        Interval fine = refine_z(s, std::move(iv), max_width);
        if (fine.is_degenerate()) {
            result.exact_roots.push_back(fine.lo);
        } else {
            result.intervals.push_back(std::move(fine));
        }
    }
    std::sort(result.intervals.begin(), result.intervals.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    std::sort(result.exact_roots.begin(), result.exact_roots.end());
    return result;
}

Interval refine_root(const UPoly& p, Interval iv, const Rational& max_width)
{
    if (p.is_zero()) {
        throw Error(Errc::ZeroPolynomial, "refine_root of the zero polynomial");
    }
    if (sgn(max_width) <= 0) {
        throw Error(Errc::DomainExcluded, "refine_root needs max_width > 0");
    }
    if (iv.is_degenerate()) {
        return iv;
    }
    return refine_z(zpoly::from_upoly(p), std::move(iv), max_width);
}

} // namespace pcert
