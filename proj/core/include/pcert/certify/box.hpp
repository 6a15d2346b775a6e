#pragma once

#include "pcert/arith/interval.hpp"
#include "pcert/arith/rational.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace pcert {

// Orthohedron with exact ends. Labels index into per-axis root lists (1-based).
struct Box {
    std::vector<Interval> intervals;
    std::vector<int> labels;

    Box() = default;
    explicit Box(std::vector<Interval> iv, std::vector<int> lab = {});

    std::size_t dim() const noexcept { return intervals.size(); }
    RationalVector midpoint() const;
    bool is_degenerate() const;
    bool contains(const RationalVector& x) const;
    bool contains(const Box& other) const;
    // Sub-box with every axis halved; index bit k picks the upper half of axis k.
    Box child(unsigned index) const;

    friend bool operator==(const Box&, const Box&) = default;
};

std::string label_string(const Box& b);
std::string to_string(const Box& b);

struct BoundPair {
    Rational lower;
    Rational upper;

    bool excludes_zero() const { return sign(lower) > 0 || sign(upper) < 0; }
    friend bool operator==(const BoundPair&, const BoundPair&) = default;
};

nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Interval& iv);
Interval interval_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Box& b);
Box box_from_json(const nlohmann::json& j);

} // namespace pcert
