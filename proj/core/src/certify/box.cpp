#include "pcert/certify/box.hpp"

#include "pcert/error.hpp"

namespace pcert {

Box::Box(std::vector<Interval> iv, std::vector<int> lab) : intervals(std::move(iv)), labels(std::move(lab))
{
    if (!labels.empty() && labels.size() != intervals.size()) {
        throw Error(Errc::ArityMismatch, "box labels and intervals differ in length");
    }
}

RationalVector Box::midpoint() const
{
    RationalVector m;
    m.reserve(intervals.size());
    for (const auto& iv : intervals) {
        m.push_back(iv.midpoint());
    }
    return m;
}

bool Box::is_degenerate() const
{
    for (const auto& iv : intervals) {
        if (!iv.is_degenerate()) {
            return false;
        }
    }
    return true;
}

bool Box::contains(const RationalVector& x) const
{
    if (x.size() != intervals.size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!intervals[i].contains(x[i])) {
            return false;
        }
    }
    return true;
}

bool Box::contains(const Box& other) const
{
    if (other.dim() != dim()) {
        return false;
    }
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!intervals[i].contains(other.intervals[i])) {
            return false;
        }
    }
    return true;
}

Box Box::child(unsigned index) const
{
    Box c;
    c.labels = labels;
    for (std::size_t k = 0; k < intervals.size(); ++k) {
        const Interval& iv = intervals[k];
        const Rational m = iv.midpoint();
        c.intervals.push_back((index >> k) & 1U ? Interval(m, iv.hi) : Interval(iv.lo, m));
    }
    return c;
}

std::string label_string(const Box& b)
{
    std::string s = "I(";
    for (std::size_t i = 0; i < b.labels.size(); ++i) {
        s += (i ? "," : "") + std::to_string(b.labels[i]);
    }
    return s + ")";
}

std::string to_string(const Box& b)
{
    std::string s;
    for (std::size_t i = 0; i < b.intervals.size(); ++i) {
        s += (i ? " x " : "") + to_string(b.intervals[i]);
    }
    return s;
}

nlohmann::json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const nlohmann::json& j)
{
    if (!j.is_string()) {
        throw Error(Errc::ParseError, "rational must be a \"num/den\" string");
    }
    return parse_rational(j.get<std::string>());
}

nlohmann::json to_json(const Interval& iv) { return nlohmann::json::array({to_json(iv.lo), to_json(iv.hi)}); }

Interval interval_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.size() != 2) {
        throw Error(Errc::ParseError, "interval must be a two-element array");
    }
    return Interval(rational_from_json(j[0]), rational_from_json(j[1]));
}

nlohmann::json to_json(const Box& b)
{
    nlohmann::json iv = nlohmann::json::array();
    for (const auto& i : b.intervals) {
        iv.push_back(to_json(i));
    }
    nlohmann::json out{{"intervals", iv}};
    if (!b.labels.empty()) {
        out["labels"] = b.labels;
    }
    return out;
}

Box box_from_json(const nlohmann::json& j)
{
    std::vector<Interval> iv;
    for (const auto& e : j.at("intervals")) {
        iv.push_back(interval_from_json(e));
    }
    std::vector<int> labels;
    if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<int>>();
    }
    return Box(std::move(iv), std::move(labels));
}

} // namespace pcert
