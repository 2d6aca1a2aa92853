#pragma once

// Closed-form Hodge-ideal calculators valid in any dimension: simple normal
// crossing divisors, ordinary singular points (smooth projectivized tangent
// cone), and the diagonal-hypersurface triviality bound coming from the
// Bernstein-Sato root formula.

#include "hodge/polynomial.hpp"
#include "hodge/rational.hpp"

#include <gmpxx.h>

#include <optional>
#include <variant>
#include <vector>

namespace hodge {

struct MonomialIdeal {
    int arity = 0;
    std::vector<Monomial> generators;  // minimal: an antichain under divisibility

    static MonomialIdeal unit(int arity);
    static MonomialIdeal maximal_power(int arity, long q);  // q <= 0 gives the unit ideal
    static MonomialIdeal from_generators(int arity, std::vector<Monomial> gens);

    bool is_unit() const;
    bool member(const Monomial& m) const;
    bool is_antichain() const;

    // Length of the quotient; requires an m-primary ideal (a pure power of
    // every variable among the generators' multiples).
    long colength() const;

    std::vector<std::string> generator_strings(const std::vector<std::string>& vars) const;
    std::vector<std::string> generator_strings() const;
};

// The SNC Hodge ideal: generated by monomials x_1^{a_1}...x_r^{a_r} with
// 0 <= a_i <= k and sum a_i = k(r-1), inside n variables.
MonomialIdeal snc_hodge_ideal(int n, int r, long k);

struct OrdinaryQuery {
    int n = 2;   // ambient dimension, >= 2
    long m = 2;  // multiplicity, >= 2
    long k = 0;  // level, >= 0
};

struct DiagonalQuery {
    std::vector<long> exponents;  // each >= 2
};

// The sandwich returned when k = 1 and m >= n: both bounds are of the shape
// (h) * m^a + m^b, together with the length of the gap.
struct OrdinarySandwich {
    long lower_curve_power = 0;  // a in (h)*m^a + m^b, lower bound
    long lower_point_power = 0;  // b
    long upper_curve_power = 0;
    long upper_point_power = 0;
    mpz_class defect_length;     // m * C(m-2, n-2)
};

struct NoClosedForm {};

using OrdinaryResult = std::variant<MonomialIdeal, OrdinarySandwich, NoClosedForm>;

// Exact ideal m^{(k+1)m-n} when mk < n; the k = 1, m >= n sandwich; and
// NoClosedForm outside the proved range.
OrdinaryResult ordinary_hodge_ideal(const OrdinaryQuery& q);

// Largest k with I_k trivial at an ordinary point: floor(n/m) - 1.
long triviality_threshold(int n, long m);

// alpha - 1 with alpha = sum 1/a_i; every integer k <= this bound has I_k
// trivial at the origin of the diagonal hypersurface.
Rational diagonal_triviality_bound(const DiagonalQuery& q);

// Guaranteed q with I_k contained in the q-th symbolic power along a
// codimension-r center of multiplicity m: max(0, min(m-1, (k+1)m-r)).
long symbolic_power_bound(int n, long m, int r, long k);

mpz_class binomial(long n, long k);

}  // namespace hodge
