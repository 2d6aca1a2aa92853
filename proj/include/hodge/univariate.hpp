#pragma once

// Dense univariate polynomials over Q: Euclidean gcd, resultants, rational
// root extraction, and the bivariate resultant computed by evaluation and
// interpolation. These are the scalar tools behind squarefreeness tests and
// the location of rational singular points.

#include "hodge/polynomial.hpp"
#include "hodge/rational.hpp"

#include <map>
#include <vector>

namespace hodge::univ {

// Ascending coefficients, no trailing zeros; empty vector is the zero poly.
using Dense = std::vector<Rational>;

Dense trim(Dense p);
int degree(const Dense& p);  // -1 for zero
bool is_zero(const Dense& p);
Dense from_polynomial(const Polynomial& p);  // requires arity 1
Polynomial to_polynomial(const Dense& p, int arity, int var);

Dense add(const Dense& a, const Dense& b);
Dense sub(const Dense& a, const Dense& b);
Dense mul(const Dense& a, const Dense& b);
Dense scale(const Rational& c, const Dense& p);
Dense derivative(const Dense& p);
Rational evaluate(const Dense& p, const Rational& x);

// Quotient/remainder over Q; divisor nonzero.
std::pair<Dense, Dense> divmod(const Dense& a, const Dense& b);
Dense divide_exact(const Dense& a, const Dense& b);

// Monic gcd; gcd(0, p) = monic p.
Dense gcd(Dense a, Dense b);

// p / gcd(p, p'): same roots, all simple.
Dense squarefree_part(const Dense& p);

// Root -> multiplicity; exact, all rational roots.
std::map<Rational, int> rational_roots(const Dense& p);
std::map<Rational, int> rational_roots(const Polynomial& p);

// Removes every rational linear factor; the returned polynomial has no
// rational roots. Outputs the roots with multiplicity alongside.
Dense strip_rational_roots(Dense p, std::map<Rational, int>* roots = nullptr);

Rational resultant(const Dense& a, const Dense& b);

// View an arity-2 polynomial as univariate in `var`; coefficients are dense
// univariate polynomials in the other variable.
std::vector<Dense> coefficients_in(const Polynomial& p, int var);

// Specialize the other variable to a value; result univariate in `var`.
Dense specialize(const Polynomial& p, int var, const Rational& value);

// Res_{elim_var}(p, q) for arity-2 inputs, as a dense polynomial in the
// remaining variable. Computed by evaluation at interpolation nodes that
// avoid leading-coefficient drops, then exact Lagrange interpolation.
Dense resultant_bivariate(const Polynomial& p, const Polynomial& q, int elim_var);

}  // namespace hodge::univ
