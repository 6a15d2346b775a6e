#include "pcert/certify/bounds.hpp"

#include "pcert/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace pcert {

namespace {

// powers[i][k] = (lo_i + off_i)^k and (hi_i + off_i)^k
struct CornerPowers {
    std::vector<std::vector<Rational>> low;
    std::vector<std::vector<Rational>> high;
};

CornerPowers corner_powers(const MPoly& p, const Box& box, std::span<const Rational> offsets)
{
    if (box.dim() != p.nvars() || offsets.size() != p.nvars()) {
        throw Error(Errc::ArityMismatch, "box dimension does not match the polynomial");
    }
    CornerPowers cp;
    cp.low.resize(box.dim());
    cp.high.resize(box.dim());
    for (std::size_t i = 0; i < box.dim(); ++i) {
        const Rational u = box.intervals[i].lo + offsets[i];
        const Rational v = box.intervals[i].hi + offsets[i];
        if (sign(u) <= 0) {
            throw Error(Errc::ShiftInsufficient,
                        "shifted interval " + to_string(Interval(u, v)) + " on axis " + std::to_string(i) + " touches 0");
        }
        const int d = std::max(p.degree_in(i), 0);
        cp.low[i].assign(1, Rational(1));
        cp.high[i].assign(1, Rational(1));
        for (int k = 1; k <= d; ++k) {
            cp.low[i].push_back(cp.low[i].back() * u);
            cp.high[i].push_back(cp.high[i].back() * v);
        }
    }
    return cp;
}

std::vector<unsigned> child_masks(const Box& box)
{
    unsigned free_bits = 0;
    for (std::size_t k = 0; k < box.dim(); ++k) {
        if (!box.intervals[k].is_degenerate()) {
            free_bits |= 1U << k;
        }
    }
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1U << box.dim()); ++m) {
        if ((m & ~free_bits) == 0) {
            masks.push_back(m);
        }
    }
    return masks;
}

int first_leaf_sign(const nlohmann::json& w)
{
    if (w.at("method") == "split") {
        return first_leaf_sign(w.at("children").at(0));
    }
    return w.at("sign").get<int>();
}

// Moves each interval to [w, 2w]; points go to the smallest such w (or 1).
RationalVector local_offsets(const Box& box)
{
    Rational w = 0;
    for (const auto& iv : box.intervals) {
        if (!iv.is_degenerate() && (w == 0 || iv.width() < w)) {
            w = iv.width();
        }
    }
    if (w == 0) {
        w = 1;
    }
    RationalVector off;
    for (const auto& iv : box.intervals) {
        off.push_back(iv.is_degenerate() ? Rational(w - iv.lo) : Rational(iv.width() - iv.lo));
    }
    return off;
}

nlohmann::json offsets_json(const RationalVector& off)
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& q : off) {
        j.push_back(to_json(q));
    }
    return j;
}

void fail_replay(const std::string& what) { throw Error(Errc::ReplayFailed, what); }

} // namespace

BoundPair bound_shifted(const MPoly& shifted, const Box& box, std::span<const Rational> offsets)
{
    const CornerPowers cp = corner_powers(shifted, box, offsets);
    BoundPair out{0, 0};
    Rational lowc;
    Rational highc;
    for (const auto& [e, c] : shifted.terms()) {
        lowc = c;
        highc = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                lowc *= cp.low[i][e[i]];
                highc *= cp.high[i][e[i]];
            }
        }
        // Positive coefficients are smallest at the lower corner.
        if (sign(c) > 0) {
            out.lower += lowc;
            out.upper += highc;
        } else {
            out.lower += highc;
            out.upper += lowc;
        }
    }
    return out;
}

BoundPair bound_on_box(const MPoly& p, const Box& box, const Rational& xi)
{
    const RationalVector offsets(p.nvars(), xi);
    return bound_shifted(shift(p, xi), box, offsets);
}

Rational positive_shift(const Box& box)
{
    Rational lo = 1;
    for (const auto& iv : box.intervals) {
        lo = std::min(lo, iv.lo);
    }
    if (sign(lo) > 0) {
        return 0;
    }
    // floor(-lo) + 1
    Integer f;
    const Rational neg = -lo;
    mpz_fdiv_q(f.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
    return Rational(f + 1);
}

Discarder::Discarder(std::vector<MPoly> system, Rational xi, int max_depth)
    : system_(std::move(system)), xi_(std::move(xi)), max_depth_(max_depth)
{
    for (const auto& p : system_) {
        shifted_.push_back(shift(p, xi_));
        hashes_.push_back(poly_hash(p));
    }
}

std::optional<nlohmann::json> Discarder::prove_leaf(const Box& box) const
{
    if (box.is_degenerate()) {
        const RationalVector x = box.midpoint();
        for (std::size_t i = 0; i < system_.size(); ++i) {
            const Rational v = eval_rat(system_[i], x);
            if (sign(v) != 0) {
                return nlohmann::json{{"method", "exact"}, {"poly", i}, {"hash", hashes_[i]}, {"value", to_json(v)},
                                      {"sign", sign(v)}};
            }
        }
        return std::nullopt;
    }
    const RationalVector center = box.midpoint();
    const RationalVector offsets(box.dim(), xi_);
    for (std::size_t i = 0; i < system_.size(); ++i) {
        // The value at the center picks the sign worth attempting.
        const int s = sign(eval_rat(system_[i], center));
        if (s == 0) {
            continue;
        }
        const BoundPair b = bound_shifted(shifted_[i], box, offsets);
        if ((s > 0 && sign(b.lower) > 0) || (s < 0 && sign(b.upper) < 0)) {
            return nlohmann::json{{"method", "bound"}, {"poly", i},           {"hash", hashes_[i]},     {"xi", to_json(xi_)},
                                  {"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}, {"sign", s}};
        }
    }
    return std::nullopt;
}

std::optional<nlohmann::json> Discarder::prove(const Box& box, int depth) const
{
    if (auto leaf = prove_leaf(box)) {
        return leaf;
    }
    if (depth >= max_depth_ || box.is_degenerate()) {
        return std::nullopt;
    }
    nlohmann::json children = nlohmann::json::array();
    for (unsigned m : child_masks(box)) {
        auto c = prove(box.child(m), depth + 1);
        if (!c) {
            return std::nullopt;
        }
        children.push_back(std::move(*c));
    }
    return nlohmann::json{{"method", "split"}, {"children", std::move(children)}};
}

std::optional<Certificate> Discarder::operator()(const Box& box) const
{
    auto w = prove(box, 0);
    if (!w) {
        return std::nullopt;
    }
    Certificate c;
    c.kind = first_leaf_sign(*w) > 0 ? CertKind::DiscardedPositive : CertKind::DiscardedNegative;
    c.box = box;
    c.witness = std::move(*w);
    return c;
}

std::optional<nlohmann::json> prove_sign(const MPoly& p, const Box& box, int s, int max_depth)
{
    if (box.is_degenerate()) {
        const Rational v = eval_rat(p, box.midpoint());
        if (sign(v) != s) {
            return std::nullopt;
        }
        return nlohmann::json{{"method", "exact"}, {"value", to_json(v)}, {"sign", s}};
    }
    const RationalVector off = local_offsets(box);
    const BoundPair b = bound_shifted(shift(p, off), box, off);
    if ((s > 0 && sign(b.lower) > 0) || (s < 0 && sign(b.upper) < 0)) {
        return nlohmann::json{{"method", "bound"},          {"offsets", offsets_json(off)}, {"lower", to_json(b.lower)},
                              {"upper", to_json(b.upper)}, {"sign", s}};
    }
    if (max_depth <= 0) {
        return std::nullopt;
    }
    nlohmann::json children = nlohmann::json::array();
    for (unsigned m : child_masks(box)) {
        auto c = prove_sign(p, box.child(m), s, max_depth - 1);
        if (!c) {
            return std::nullopt;
        }
        children.push_back(std::move(*c));
    }
    return nlohmann::json{{"method", "split"}, {"children", std::move(children)}};
}

void check_sign_tree(const nlohmann::json& w, const Box& box, const std::vector<MPoly>& polys, int s)
{
    const std::string method = w.at("method").get<std::string>();
    if (method == "split") {
        const auto masks = child_masks(box);
        const auto& children = w.at("children");
        if (children.size() != masks.size()) {
            fail_replay("split witness has " + std::to_string(children.size()) + " children, expected " +
                        std::to_string(masks.size()));
        }
        for (std::size_t k = 0; k < masks.size(); ++k) {
            check_sign_tree(children[k], box.child(masks[k]), polys, s);
        }
        return;
    }
    const std::size_t idx = w.contains("poly") ? w.at("poly").get<std::size_t>() : 0;
    if (idx >= polys.size()) {
        fail_replay("witness names polynomial " + std::to_string(idx) + " outside the system");
    }
    const MPoly& p = polys[idx];
    if (w.contains("hash") && w.at("hash").get<std::string>() != poly_hash(p)) {
        fail_replay("polynomial " + std::to_string(idx) + " hash mismatch");
    }
    if (w.at("sign").get<int>() != s) {
        fail_replay("leaf sign disagrees with the certificate");
    }
    if (method == "exact") {
        if (!box.is_degenerate()) {
            fail_replay("exact witness on a box that is not a point");
        }
        const Rational v = eval_rat(p, box.midpoint());
        if (v != rational_from_json(w.at("value")) || sign(v) != s) {
            fail_replay("exact value mismatch on " + to_string(box));
        }
        return;
    }
    if (method != "bound") {
        fail_replay("unknown witness method '" + method + "'");
    }
    RationalVector off;
    if (w.contains("offsets")) {
        for (const auto& q : w.at("offsets")) {
            off.push_back(rational_from_json(q));
        }
    } else {
        off.assign(box.dim(), rational_from_json(w.at("xi")));
    }
    if (off.size() != box.dim()) {
        fail_replay("offset count does not match the box");
    }
    BoundPair b;
    try {
        b = bound_shifted(shift(p, off), box, off);
    } catch (const Error& e) {
        fail_replay(std::string("bound recomputation failed: ") + e.what());
    }
    if (b.lower != rational_from_json(w.at("lower")) || b.upper != rational_from_json(w.at("upper"))) {
        fail_replay("recomputed bounds differ on " + to_string(box));
    }
    if (!((s > 0 && sign(b.lower) > 0) || (s < 0 && sign(b.upper) < 0))) {
        fail_replay("bounds do not exclude 0 on " + to_string(box));
    }
}

std::optional<Certificate> discard_box(const std::vector<MPoly>& system, const Box& box, const Rational& xi)
{
    return Discarder(system, xi)(box);
}

SweepResult sweep(const std::vector<MPoly>& system, const std::vector<std::vector<Interval>>& axes, const Rational& xi,
                  unsigned workers)
{
    std::size_t total = axes.empty() ? 0 : 1;
    for (const auto& a : axes) {
        total *= a.size();
    }
    std::vector<Box> boxes;
    boxes.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        // Row-major with the last axis fastest, so label order is lexicographic.
        std::vector<Interval> iv(axes.size());
        std::vector<int> labels(axes.size());
        std::size_t rest = idx;
        for (std::size_t k = axes.size(); k-- > 0;) {
            const std::size_t j = rest % axes[k].size();
            rest /= axes[k].size();
            iv[k] = axes[k][j];
            labels[k] = static_cast<int>(j + 1);
        }
        boxes.emplace_back(std::move(iv), std::move(labels));
    }

    const Discarder discard(system, xi);
    std::vector<std::optional<Certificate>> results(total);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total || failed.load()) {
                return;
            }
            try {
                results[i] = discard(boxes[i]);
            } catch (...) {
                if (!failed.exchange(true)) {
                    error = std::current_exception();
                }
                return;
            }
        }
    };
    if (workers == 0) {
        workers = std::max(1U, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) {
        pool.emplace_back(work);
    }
    work();
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }

    SweepResult out;
    for (std::size_t i = 0; i < total; ++i) {
        if (results[i]) {
            out.certificates.push_back(std::move(*results[i]));
        } else {
            out.survivors.push_back(std::move(boxes[i]));
        }
    }
    return out;
}

} // namespace pcert
