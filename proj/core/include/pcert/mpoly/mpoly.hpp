#pragma once

#include "pcert/arith/bigfloat.hpp"
#include "pcert/arith/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcert {

using Monomial = std::vector<unsigned>;

// Graded lexicographic: total degree first, then lexicographic on exponents.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

// Sparse multivariate polynomial over Q with a fixed, ordered variable list.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> variables);

    static MPoly constant(std::vector<std::string> variables, const Rational& c);
    static MPoly variable(std::vector<std::string> variables, std::string_view name);
    // Sum of monomials such as "-m^4*n^3*r^4 + 5*m^3*r^4 - 16" (no parentheses).
    static MPoly parse(std::string_view expr, std::vector<std::string> variables);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    // Throws Error(UnknownVariable).
    std::size_t index_of(std::string_view name) const;

    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;

    // Adds c * monomial, dropping the term if it cancels.
    void add_term(const Monomial& e, const Rational& c);
    Rational coefficient(const Monomial& e) const;

    int degree_in(std::size_t var) const;
    int degree_in(std::string_view var) const { return degree_in(index_of(var)); }
    int total_degree() const;
    // Variables with a positive exponent somewhere.
    std::vector<std::size_t> used_variables() const;

    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(const MPoly& rhs);
    MPoly& operator*=(const Rational& c);

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

    std::string to_string() const;
    // "num/den e1 ... en" per term, grlex descending, preceded by "# v1 ... vn".
    std::string to_text() const;
    static MPoly from_text(std::string_view text);
    std::uint64_t hash() const;

private:
    void require_same_vars(const MPoly& other) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(MPoly a, const Rational& c);
MPoly operator*(const Rational& c, MPoly a);
MPoly operator-(const MPoly& a);
MPoly pow(const MPoly& p, unsigned k);

// Throws Error(ArityMismatch) when the point has the wrong length.
Rational eval_rat(const MPoly& p, std::span<const Rational> point);
BigFloat eval_float(const MPoly& p, std::span<const BigFloat> point);

// p(x1 - xi, ..., xn - xi)
MPoly shift(const MPoly& p, const Rational& xi);
// p(x1 - xi_1, ..., xn - xi_n)
MPoly shift(const MPoly& p, std::span<const Rational> xis);
// Throws Error(UnknownVariable).
MPoly partial(const MPoly& p, std::string_view var);
MPoly partial(const MPoly& p, std::size_t var);

// Substitutes var = value and removes var from the variable list.
MPoly specialize(const MPoly& p, std::size_t var, const Rational& value);

// Variable i of p is replaced by the variable named replacement[i]; the
// variable list is unchanged. For p = d(m, n, r), replacement {"n", "r", "m"}
// yields d(n, r, m).
MPoly rename_cyclic(const MPoly& p, std::span<const std::string> replacement);

// Same polynomial over a different variable list; every used variable must
// appear in `variables`.
MPoly with_variables(const MPoly& p, std::vector<std::string> variables);

// Exact quotient a / b; throws Error(FactorizationMismatch) when b does not divide a.
MPoly divide_exact(const MPoly& a, const MPoly& b);

} // namespace pcert
