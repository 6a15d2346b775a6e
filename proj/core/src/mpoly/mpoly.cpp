#include "pcert/mpoly/mpoly.hpp"

#include "pcert/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace pcert {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const noexcept
{
    const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) {
        return da < db;
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly::MPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MPoly MPoly::constant(std::vector<std::string> variables, const Rational& c)
{
    MPoly p(std::move(variables));
    p.add_term(Monomial(p.nvars(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> variables, std::string_view name)
{
    MPoly p(std::move(variables));
    Monomial e(p.nvars(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(e, 1);
    return p;
}

std::size_t MPoly::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
            return i;
        }
    }
    throw Error(Errc::UnknownVariable, "variable '" + std::string(name) + "' not declared");
}

bool MPoly::is_constant() const noexcept
{
    if (terms_.empty()) {
        return true;
    }
    if (terms_.size() > 1) {
        return false;
    }
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

void MPoly::add_term(const Monomial& e, const Rational& c)
{
    if (e.size() != vars_.size()) {
        throw Error(Errc::ArityMismatch, "monomial length does not match the variable count");
    }
    if (sgn(c) == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

Rational MPoly::coefficient(const Monomial& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::degree_in(std::size_t var) const
{
    if (terms_.empty()) {
        return -1;
    }
    int d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, static_cast<int>(e[var]));
    }
    return d;
}

int MPoly::total_degree() const
{
    if (terms_.empty()) {
        return -1;
    }
    const auto& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

std::vector<std::size_t> MPoly::used_variables() const
{
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (degree_in(i) > 0) {
            used.push_back(i);
        }
    }
    return used;
}

void MPoly::require_same_vars(const MPoly& other) const
{
    if (vars_ != other.vars_) {
        throw Error(Errc::ArityMismatch, "polynomials over different variable lists");
    }
}

MPoly& MPoly::operator+=(const MPoly& rhs)
{
    require_same_vars(rhs);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs)
{
    require_same_vars(rhs);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& rhs)
{
    require_same_vars(rhs);
    MPoly out(vars_);
    Monomial e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) {
        x *= c;
    }
    return *this;
}

std::string MPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                out << "-";
            }
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool any_var = false;
        std::string vars;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (any_var) {
                vars += "*";
            }
            vars += vars_[i];
            if (e[i] > 1) {
                vars += "^" + std::to_string(e[i]);
            }
            any_var = true;
        }
        if (!any_var) {
            out << mag.get_str();
        } else if (mag == 1) {
            out << vars;
        } else {
            out << mag.get_str() << "*" << vars;
        }
    }
    return out.str();
}

std::string MPoly::to_text() const
{
    std::string s = "#";
    for (const auto& v : vars_) {
        s += " " + v;
    }
    s += "\n";
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        s += pcert::to_string(it->second);
        for (unsigned k : it->first) {
            s += " " + std::to_string(k);
        }
        s += "\n";
    }
    return s;
}

MPoly MPoly::from_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line.empty() || line[0] != '#') {
        throw Error(Errc::ParseError, "sparse polynomial text must start with '# vars'");
    }
    std::vector<std::string> vars;
    {
        std::istringstream header(line.substr(1));
        std::string v;
        while (header >> v) {
            vars.push_back(v);
        }
    }
    MPoly p(vars);
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream row(line);
        std::string coef;
        row >> coef;
        Monomial e(vars.size());
        for (auto& k : e) {
            long v = -1;
            if (!(row >> v) || v < 0) {
                throw Error(Errc::ParseError, "bad exponent row: " + line);
            }
            k = static_cast<unsigned>(v);
        }
        std::string extra;
        if (row >> extra) {
            throw Error(Errc::ParseError, "too many exponents: " + line);
        }
        p.add_term(e, parse_rational(coef));
    }
    return p;
}

std::uint64_t MPoly::hash() const
{
    return fnv1a64(to_text());
}

MPoly MPoly::parse(std::string_view expr, std::vector<std::string> variables)
{
    MPoly p(std::move(variables));
    std::string s;
    for (char ch : expr) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += ch;
        }
    }
    if (s.empty()) {
        throw Error(Errc::ParseError, "empty polynomial expression");
    }
    std::size_t pos = 0;
    auto read_uint = [&](std::size_t& at) {
        const std::size_t start = at;
        while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) {
            ++at;
        }
        if (start == at) {
            throw Error(Errc::ParseError, "expected a number at offset " + std::to_string(start) + " in '" + s + "'");
        }
        return s.substr(start, at - start);
    };
    while (pos < s.size()) {
        int sign_factor = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') {
                sign_factor = -sign_factor;
            }
            ++pos;
        }
        Rational coef = sign_factor;
        Monomial e(p.nvars(), 0);
        for (;;) {
            if (pos >= s.size()) {
                throw Error(Errc::ParseError, "dangling operator in '" + s + "'");
            }
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                std::string num = read_uint(pos);
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    num += "/" + read_uint(pos);
                }
                coef *= parse_rational(num);
            } else {
                const std::size_t start = pos;
                while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                    ++pos;
                }
                if (start == pos) {
                    throw Error(Errc::ParseError, "unexpected character '" + std::string(1, s[pos]) + "' in '" + s + "'");
                }
                const std::size_t v = p.index_of(std::string_view(s).substr(start, pos - start));
                unsigned k = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    k = static_cast<unsigned>(std::stoul(read_uint(pos)));
                }
                e[v] += k;
            }
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        p.add_term(e, coef);
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            throw Error(Errc::ParseError, "unexpected character '" + std::string(1, s[pos]) + "' in '" + s + "'");
        }
    }
    return p;
}

MPoly operator+(MPoly a, const MPoly& b)
{
    a += b;
    return a;
}

MPoly operator-(MPoly a, const MPoly& b)
{
    a -= b;
    return a;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    MPoly r = a;
    r *= b;
    return r;
}

MPoly operator*(MPoly a, const Rational& c)
{
    a *= c;
    return a;
}

MPoly operator*(const Rational& c, MPoly a)
{
    a *= c;
    return a;
}

MPoly operator-(const MPoly& a)
{
    return a * Rational(-1);
}

MPoly pow(const MPoly& p, unsigned k)
{
    MPoly result = MPoly::constant(p.variables(), 1);
    MPoly base = p;
    while (k) {
        if (k & 1) {
            result *= base;
        }
        k >>= 1;
        if (k) {
            base *= base;
        }
    }
    return result;
}

namespace {

template <typename Scalar, typename MakeScalar>
Scalar eval_generic(const MPoly& p, std::span<const Scalar> point, MakeScalar make)
{
    if (point.size() != p.nvars()) {
        throw Error(Errc::ArityMismatch, "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                                             std::to_string(p.nvars()) + " variables");
    }
    std::vector<std::vector<Scalar>> powers(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        const int d = std::max(p.degree_in(i), 0);
        powers[i].reserve(static_cast<std::size_t>(d + 1));
        powers[i].push_back(make(Rational(1)));
        for (int k = 1; k <= d; ++k) {
            powers[i].push_back(powers[i].back() * point[i]);
        }
    }
    Scalar acc = make(Rational(0));
    for (const auto& [e, c] : p.terms()) {
        Scalar t = make(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i]) {
                t *= powers[i][e[i]];
            }
        }
        acc += t;
    }
    return acc;
}

} // namespace

Rational eval_rat(const MPoly& p, std::span<const Rational> point)
{
    return eval_generic<Rational>(p, point, [](const Rational& q) { return q; });
}

BigFloat eval_float(const MPoly& p, std::span<const BigFloat> point)
{
    Precision prec = kDefaultPrecision;
    if (!point.empty()) {
        prec = point.front().precision();
    }
    return eval_generic<BigFloat>(p, point, [prec](const Rational& q) { return BigFloat(prec, q); });
}

MPoly shift(const MPoly& p, const Rational& xi)
{
    const RationalVector xis(p.nvars(), xi);
    return shift(p, xis);
}

MPoly shift(const MPoly& p, std::span<const Rational> xis)
{
    const std::size_t n = p.nvars();
    if (xis.size() != n) {
        throw Error(Errc::ArityMismatch, "shift needs one offset per variable");
    }
    // rows[i][k]: coefficients of (x_i - xi_i)^k, ascending in x_i.
    std::vector<std::vector<std::vector<Rational>>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int maxdeg = std::max(p.degree_in(i), 0);
        rows[i].resize(static_cast<std::size_t>(maxdeg + 1));
        rows[i][0] = {Rational(1)};
        for (int k = 1; k <= maxdeg; ++k) {
            const auto& prev = rows[i][static_cast<std::size_t>(k - 1)];
            std::vector<Rational> row(static_cast<std::size_t>(k + 1), Rational(0));
            for (std::size_t j = 0; j < prev.size(); ++j) {
                row[j + 1] += prev[j];
                row[j] -= xis[i] * prev[j];
            }
            rows[i][static_cast<std::size_t>(k)] = std::move(row);
        }
    }
    MPoly out(p.variables());
    for (const auto& [e, c] : p.terms()) {
        Monomial idx(n, 0);
        for (;;) {
            Rational coef = c;
            for (std::size_t i = 0; i < n && sgn(coef) != 0; ++i) {
                coef *= rows[i][e[i]][idx[i]];
            }
            out.add_term(idx, coef);
            std::size_t i = 0;
            while (i < n && idx[i] == e[i]) {
                idx[i] = 0;
                ++i;
            }
            if (i == n) {
                break;
            }
            ++idx[i];
        }
    }
    return out;
}

MPoly partial(const MPoly& p, std::size_t var)
{
    if (var >= p.nvars()) {
        throw Error(Errc::UnknownVariable, "variable index out of range");
    }
    MPoly out(p.variables());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) {
            continue;
        }
        Monomial d = e;
        --d[var];
        out.add_term(d, c * static_cast<long>(e[var]));
    }
    return out;
}

MPoly partial(const MPoly& p, std::string_view var)
{
    return partial(p, p.index_of(var));
}

MPoly specialize(const MPoly& p, std::size_t var, const Rational& value)
{
    std::vector<std::string> vars = p.variables();
    vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(var));
    MPoly out(std::move(vars));
    std::vector<Rational> powers{Rational(1)};
    for (const auto& [e, c] : p.terms()) {
        while (powers.size() <= e[var]) {
            powers.push_back(powers.back() * value);
        }
        Monomial d = e;
        d.erase(d.begin() + static_cast<std::ptrdiff_t>(var));
        out.add_term(d, c * powers[e[var]]);
    }
    return out;
}

MPoly rename_cyclic(const MPoly& p, std::span<const std::string> replacement)
{
    if (replacement.size() != p.nvars()) {
        throw Error(Errc::ArityMismatch, "replacement list length must equal the variable count");
    }
    std::vector<std::size_t> target(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        target[i] = p.index_of(replacement[i]);
    }
    MPoly out(p.variables());
    for (const auto& [e, c] : p.terms()) {
        Monomial d(p.nvars(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            d[target[i]] += e[i];
        }
        out.add_term(d, c);
    }
    return out;
}

MPoly with_variables(const MPoly& p, std::vector<std::string> variables)
{
    MPoly out(std::move(variables));
    std::vector<std::size_t> where(p.nvars(), out.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        for (std::size_t j = 0; j < out.nvars(); ++j) {
            if (out.variables()[j] == p.variables()[i]) {
                where[i] = j;
            }
        }
    }
    for (const auto& [e, c] : p.terms()) {
        Monomial d(out.nvars(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (where[i] == out.nvars()) {
                throw Error(Errc::UnknownVariable, "variable '" + p.variables()[i] + "' missing from the target list");
            }
            d[where[i]] = e[i];
        }
        out.add_term(d, c);
    }
    return out;
}

MPoly divide_exact(const MPoly& a, const MPoly& b)
{
    if (b.is_zero()) {
        throw Error(Errc::ZeroPolynomial, "exact division by the zero polynomial");
    }
    if (a.variables() != b.variables()) {
        throw Error(Errc::ArityMismatch, "polynomials over different variable lists");
    }
    const auto& [lb_exp, lb_coef] = *b.terms().rbegin();
    const Rational inv_lb = 1 / lb_coef;
    MPoly r = a;
    MPoly q(a.variables());
    Monomial diff(a.nvars());
    while (!r.is_zero()) {
        const auto& [lr_exp, lr_coef] = *r.terms().rbegin();
        for (std::size_t i = 0; i < diff.size(); ++i) {
            if (lr_exp[i] < lb_exp[i]) {
                throw Error(Errc::FactorizationMismatch, "multivariate division leaves a remainder");
            }
            diff[i] = lr_exp[i] - lb_exp[i];
        }
        const Rational t = lr_coef * inv_lb;
        q.add_term(diff, t);
        Monomial e(diff.size());
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = eb[i] + diff[i];
            }
            r.add_term(e, -t * cb);
        }
    }
    return q;
}

} // namespace pcert
