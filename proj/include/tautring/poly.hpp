#ifndef TAUTRING_POLY_HPP
#define TAUTRING_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tautring/rational.hpp"
#include "tautring/varspace.hpp"

namespace tautring {

using Exponents = std::vector<int>;

/// Strict weak order on exponent vectors: descending graded lexicographic,
/// graded by the weighted degree of the variable space. Map iteration in
/// this order is the canonical term order used for all serialization.
struct TermOrder {
    const VarSpace* space = nullptr;

    long weighted_degree(const Exponents& e) const {
        long d = 0;
        for (int i = 0; i < static_cast<int>(e.size()); ++i) d += long(e[i]) * space->weight(i);
        return d;
    }

    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = weighted_degree(a), db = weighted_degree(b);
        if (da != db) return da > db;
        return a > b;  // lexicographic in declared variable order, descending
    }
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed weighted variable space. No zero coefficients are ever stored; two
/// polynomials are equal iff their term maps are equal.
class Poly {
public:
    using TermMap = std::map<Exponents, Rational, TermOrder>;

    explicit Poly(VarSpacePtr space);

    static Poly zero(VarSpacePtr space) { return Poly(std::move(space)); }
    static Poly constant(VarSpacePtr space, const Rational& c);
    static Poly variable(VarSpacePtr space, int index);
    static Poly variable(VarSpacePtr space, const std::string& name);
    static Poly monomial(VarSpacePtr space, Exponents exps, const Rational& c);

    const VarSpacePtr& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of an exponent vector (zero if absent).
    Rational coeff(const Exponents& e) const;
    /// Constant term.
    Rational constant_term() const;

    /// True when every term has the given weighted degree (the zero
    /// polynomial is homogeneous of every degree).
    bool is_homogeneous(long degree) const;
    /// True when every exponent of variable `index` is even.
    bool even_in(int index) const;
    /// True when every coefficient is an integer.
    bool has_integer_coeffs() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, Poly p);
    friend Poly operator*(Poly p, const Rational& c) { return c * std::move(p); }
    Poly pow(int k) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Exact composite: every variable occurring in *this must be bound and
    /// all bound images must share one target space. Unused extra bindings
    /// are allowed.
    Poly substitute(const std::map<std::string, Poly>& bindings) const;

    /// Evaluate at a rational point; every occurring variable must be bound.
    Rational evaluate(const std::map<std::string, Rational>& point) const;

    /// Canonical text form, terms in canonical order: "609*x^3 + 81*y^2".
    std::string str() const;

    void set_coeff(const Exponents& e, const Rational& c);  // erases on zero

private:
    VarSpacePtr space_;
    TermMap terms_;
};

/// All exponent vectors of exact weighted degree `degree`, in canonical
/// (descending graded-lex) order. `parity`, when given, holds one entry per
/// variable: -1 for unconstrained, 0 to require even exponents, 1 odd.
std::vector<Exponents> monomials_of_weighted_degree(const VarSpacePtr& space, long degree,
                                                    const std::vector<int>* parity = nullptr);

}  // namespace tautring

#endif
