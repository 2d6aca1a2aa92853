#pragma once

// Embedded log resolution of a reduced plane curve at a rational point by
// iterated point blow-ups. Each exceptional divisor carries the multiplicity
// data needed downstream: ord_E of the curve, the discrepancy, and ord_E of
// the maximal ideal at the original center. The finished tree doubles as a
// divisorial valuation oracle via chart pullbacks.
//
// Ground-field policy: only rational points are ever blown up. If simple
// normal crossings would require a blow-up at a non-rational point, the
// resolution aborts with GroundFieldError naming the chart and the residual
// factor whose roots are irrational.

#include "hodge/jet_ideal.hpp"
#include "hodge/polynomial.hpp"
#include "hodge/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodge {

struct GroundFieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BlowupCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlaneCurve {
    Polynomial equation{2};  // arity 2, nonzero, nonconstant, squarefree

    static PlaneCurve from_polynomial(Polynomial h);
};

// Is the arity-2 polynomial squarefree over Q? Exact: axis-parallel content
// is tested by univariate gcds, the remainder by a bivariate resultant.
bool is_squarefree(const Polynomial& h);

struct ChartStep {
    enum class Kind { Translate, BlowFirst, BlowSecond };
    Kind kind = Kind::Translate;
    Rational a, b;  // translate offsets

    static ChartStep translate(const Rational& a, const Rational& b) { return {Kind::Translate, a, b}; }
    static ChartStep blow_first() { return {Kind::BlowFirst, Rational(0), Rational(0)}; }
    static ChartStep blow_second() { return {Kind::BlowSecond, Rational(0), Rational(0)}; }

    std::string str() const;
};

using ChartMap = std::vector<ChartStep>;

// p is in coordinates centered at the blown-up point; the result is p
// composed through every step, i.e. the total-transform pullback.
Polynomial pullback(Polynomial p, const ChartMap& chart);

std::string chart_str(const ChartMap& chart);

struct ExceptionalDivisor {
    int id = 0;            // 1-based creation order
    ChartMap chart;        // chart (in centered coordinates) where E is the axis below
    int axis = 0;          // chart coordinate cutting E
    long ord_curve = 0;    // v_i = ord_E of the total transform of the curve
    long discrepancy = 0;  // k_i, coefficient in the relative canonical divisor
    long ord_center = 0;   // rho_i = ord_E of the maximal ideal at the center
    std::optional<int> parent;
};

// Record of the normal-crossing certification that ended the resolution.
struct SncCertificate {
    int blowups = 0;
    int charts_examined = 0;
};

class ResolutionTree {
public:
    // Center must lie on the curve. A smooth center yields an empty tree.
    static ResolutionTree resolve(const PlaneCurve& curve, const RationalPoint& center,
                                  int max_blowups = 128);

    const PlaneCurve& curve() const { return curve_; }
    const RationalPoint& center() const { return center_; }
    const std::vector<ExceptionalDivisor>& divisors() const { return divisors_; }
    bool empty() const { return divisors_.empty(); }
    int blowup_count() const { return certificate_.blowups; }
    const SncCertificate& certificate() const { return certificate_; }

    // Divisorial valuation of a nonzero polynomial in ambient coordinates.
    long ord_divisor(int id, const Polynomial& p) const;

    // Discrepancy re-derived from the chart map Jacobian; equals the stored
    // value by construction.
    long jacobian_discrepancy(int id) const;

    // min(1, min_i (k_i + 1)/v_i); 1 for the empty tree.
    Rational lct() const;

    // Appends a redundant blow-up at the rational point (0, position) of the
    // given divisor's chart. The result is another log resolution of the
    // same curve; pushforward ideals computed from it must not change.
    ResolutionTree with_extra_blowup(int divisor_id, const Rational& position) const;

private:
    ResolutionTree() = default;
    Polynomial centered_equation() const;

    PlaneCurve curve_;
    RationalPoint center_;
    std::vector<ExceptionalDivisor> divisors_;
    SncCertificate certificate_;
};

}  // namespace hodge
