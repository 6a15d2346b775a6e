#include "pcert/arith/interval.hpp"

#include "pcert/error.hpp"

#include <utility>

namespace pcert {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h))
{
    if (hi < lo) {
        throw Error(Errc::ArityMismatch, "interval with lo > hi: [" + to_string(lo) + ", " + to_string(hi) + "]");
    }
}

std::string to_string(const Interval& iv)
{
    return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

} // namespace pcert
