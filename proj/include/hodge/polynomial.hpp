#pragma once

// Exact sparse multivariate polynomials over Q with a fixed graded
// lexicographic term order. The order is used only for canonical display,
// hashing and deterministic iteration; no algorithm depends on it
// semantically.

#include "hodge/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodge {

struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}
    static Monomial unit(int arity) { return Monomial(std::vector<int>(static_cast<size_t>(arity), 0)); }

    int arity() const { return static_cast<int>(exp.size()); }
    int degree() const {
        int d = 0;
        for (int e : exp) d += e;
        return d;
    }
    bool is_unit() const { return degree() == 0; }

    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > o.exp[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

// Graded lexicographic: lower total degree first, then lexicographically
// smaller exponent vector first (so within a degree, y^d < ... < x^d).
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exp < b.exp;
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    explicit Polynomial(int arity = 0) : arity_(arity) {}

    static Polynomial zero(int arity) { return Polynomial(arity); }
    static Polynomial constant(int arity, const Rational& c);
    static Polynomial variable(int arity, int var);
    static Polynomial from_monomial(const Monomial& m, const Rational& c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }
    size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
    // Degree of the lowest term; throws on zero.
    int order() const;
    // Largest power of the given variable that divides every term; 0 for the
    // zero polynomial by convention.
    int min_exponent(int var) const;
    int degree_in(int var) const;  // -1 for zero

    const TermMap& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;
    Rational constant_term() const { return coeff(Monomial::unit(arity_)); }
    // Leading term in graded lex.
    std::pair<Monomial, Rational> leading_term() const;

    Polynomial& add_term(const Monomial& m, const Rational& c);

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(int e) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // Exact substitution p(s_0, ..., s_{n-1}); each s_i shares one arity.
    Polynomial compose(const std::vector<Polynomial>& subst) const;

    // p(x + c): compose with x_i + c_i.
    Polynomial translate(const std::vector<Rational>& shift) const;

    // Drops every term of total degree >= bound.
    Polynomial truncate(int bound) const;

    // Quotient when divisor divides exactly, nullopt otherwise.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    // The homogeneous part of lowest degree (tangent cone at the origin).
    Polynomial lowest_form() const;
    bool is_homogeneous() const;

    std::string render(const std::vector<std::string>& vars) const;
    std::string render() const;  // default names x,y,z,w,v5,...

private:
    int arity_;
    TermMap terms_;
};

std::vector<std::string> default_var_names(int arity);

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Grammar: rational literals (n or n/d), identifiers from vars, + - * ^ and
// parentheses; whitespace ignored; no implicit multiplication.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

Polynomial partial_derivative(const Polynomial& p, int var);

// h^(k+1) * d^beta (g/h) for |beta| <= k; always a polynomial. Computed via
// the quotient-rule recursion on numerators, so no division is performed.
Polynomial twisted_derivative(const Polynomial& g, const Polynomial& h, const Monomial& beta, int k);

// All monomials of the given arity with degree < bound, in graded lex order.
std::vector<Monomial> monomial_basis(int arity, int bound);
// Monomials of exactly the given degree, graded lex order.
std::vector<Monomial> monomials_of_degree(int arity, int degree);
long jet_dimension(int arity, int bound);

}  // namespace hodge
