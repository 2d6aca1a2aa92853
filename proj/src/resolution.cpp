#include "hodge/resolution.hpp"

#include "hodge/univariate.hpp"

#include <algorithm>
#include <sstream>

namespace hodge {

namespace {

constexpr int kX = 0;
constexpr int kY = 1;

Polynomial content_free_part(const Polynomial& h, int var, univ::Dense* content_out) {
    // Content of h viewed in `var`: gcd of the coefficients, which are
    // univariate in the other variable.
    const auto coeffs = univ::coefficients_in(h, var);
    univ::Dense g;
    for (const auto& c : coeffs) g = univ::gcd(g, c);
    if (content_out) *content_out = g;
    if (univ::degree(g) <= 0) return h;
    const int other = 1 - var;
    const Polynomial gp = univ::to_polynomial(g, 2, other);
    auto q = h.divide_exact(gp);
    if (!q) throw std::logic_error("content division failed");
    return *q;
}

bool dense_squarefree(const univ::Dense& p) {
    if (univ::degree(p) <= 0) return true;
    return univ::degree(univ::gcd(p, univ::derivative(p))) <= 0;
}

}  // namespace

bool is_squarefree(const Polynomial& h) {
    if (h.arity() != 2) throw std::invalid_argument("is_squarefree: arity must be 2");
    if (h.is_zero()) return false;
    univ::Dense cy, cx;
    Polynomial h1 = content_free_part(h, kX, &cy);   // cy in y
    Polynomial h0 = content_free_part(h1, kY, &cx);  // cx in x
    if (!dense_squarefree(cy) || !dense_squarefree(cx)) return false;
    if (h0.degree_in(kX) <= 0 || h0.degree_in(kY) <= 0) {
        // With both contents removed, a polynomial missing one of the
        // variables is constant.
        return true;
    }
    const univ::Dense res = univ::resultant_bivariate(h0, partial_derivative(h0, kX), kY);
    return !univ::is_zero(res);
}

PlaneCurve PlaneCurve::from_polynomial(Polynomial h) {
    if (h.arity() != 2) throw std::invalid_argument("plane curve equation must have two variables");
    if (h.is_zero() || h.degree() < 1)
        throw std::invalid_argument("plane curve equation must be nonconstant");
    if (!is_squarefree(h))
        throw std::invalid_argument("plane curve equation is not squarefree (divisor not reduced)");
    return PlaneCurve{std::move(h)};
}

std::string ChartStep::str() const {
    switch (kind) {
        case Kind::Translate:
            return "translate(" + a.str() + ", " + b.str() + ")";
        case Kind::BlowFirst:
            return "blow(x, x*y)";
        case Kind::BlowSecond:
            return "blow(x*y, y)";
    }
    return "?";
}

std::string chart_str(const ChartMap& chart) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < chart.size(); ++i) {
        if (i) os << "; ";
        os << chart[i].str();
    }
    os << "]";
    return os.str();
}

Polynomial pullback(Polynomial p, const ChartMap& chart) {
    for (const auto& step : chart) {
        switch (step.kind) {
            case ChartStep::Kind::Translate:
                p = p.translate({step.a, step.b});
                break;
            case ChartStep::Kind::BlowFirst: {
                const Polynomial x = Polynomial::variable(2, kX);
                const Polynomial y = Polynomial::variable(2, kY);
                p = p.compose({x, x * y});
                break;
            }
            case ChartStep::Kind::BlowSecond: {
                const Polynomial x = Polynomial::variable(2, kX);
                const Polynomial y = Polynomial::variable(2, kY);
                p = p.compose({x * y, y});
                break;
            }
        }
    }
    return p;
}

namespace {

Polynomial extract_axis_power(const Polynomial& p, int axis, int* power_out) {
    const int e = p.is_zero() ? 0 : p.min_exponent(axis);
    if (power_out) *power_out = e;
    if (e == 0) return p;
    const Polynomial axis_pow = Polynomial::variable(2, axis).pow(e);
    auto q = p.divide_exact(axis_pow);
    if (!q) throw std::logic_error("axis power extraction failed");
    return *q;
}

struct BoundaryCurve {
    int id;
    Polynomial eq;  // local equation in the chart, smooth where it vanishes
};

struct ChartState {
    ChartMap map;
    std::vector<BoundaryCurve> boundary;  // divisors meeting this chart's action
    Polynomial strict;                    // strict transform of the curve
    std::optional<int> owner;             // divisor whose axis we sit on
    int owner_axis = 0;
};

struct Resolver {
    const Polynomial h0;  // curve equation in centered coordinates
    const int max_blowups;
    std::vector<ExceptionalDivisor> divisors;
    int blowups = 0;
    int charts_examined = 0;

    Resolver(Polynomial h, int cap) : h0(std::move(h)), max_blowups(cap) {}

    [[noreturn]] void ground_field_fail(const ChartState& state, const univ::Dense& residual,
                                        int param_var) {
        const Polynomial factor = univ::to_polynomial(residual, 2, param_var);
        throw GroundFieldError(
            "resolution requires a blow-up at a non-rational point: in chart " +
            chart_str(state.map) + " the factor " + factor.render({"u", "v"}) +
            " has no rational root");
    }

    void blow_up(const ChartState& state) {
        if (++blowups > max_blowups)
            throw BlowupCapError("resolution exceeded the blow-up cap of " +
                                 std::to_string(max_blowups));
        if (state.strict.is_zero() || !state.strict.constant_term().is_zero())
            throw std::logic_error("blow-up requested at a point off the strict transform");
        const int mult = state.strict.order();

        long v = mult;
        long k = 1;
        std::vector<BoundaryCurve> through;
        for (const auto& b : state.boundary) {
            if (!b.eq.constant_term().is_zero()) continue;  // misses the blown-up point
            through.push_back(b);
            v += divisors[static_cast<size_t>(b.id - 1)].ord_curve;
            k += divisors[static_cast<size_t>(b.id - 1)].discrepancy;
        }

        ExceptionalDivisor div;
        div.id = static_cast<int>(divisors.size()) + 1;
        div.chart = state.map;
        div.chart.push_back(ChartStep::blow_first());
        div.axis = kX;
        div.ord_curve = v;
        div.discrepancy = k;
        div.parent = state.owner;
        {
            // rho and a consistency check on v via direct pullbacks.
            const Polynomial px = pullback(Polynomial::variable(2, kX), div.chart);
            const Polynomial py = pullback(Polynomial::variable(2, kY), div.chart);
            div.ord_center = std::min(px.min_exponent(kX), py.min_exponent(kX));
            const Polynomial ph = pullback(h0, div.chart);
            if (ph.min_exponent(kX) != v)
                throw std::logic_error("divisor multiplicity bookkeeping mismatch");
        }
        divisors.push_back(div);
        const int new_id = div.id;

        for (int which = 0; which < 2; ++which) {
            const bool first_chart = (which == 0);
            ChartState child;
            child.map = state.map;
            child.map.push_back(first_chart ? ChartStep::blow_first() : ChartStep::blow_second());
            child.owner = new_id;
            child.owner_axis = first_chart ? kX : kY;

            const Polynomial u = Polynomial::variable(2, kX);
            const Polynomial w = Polynomial::variable(2, kY);
            const std::vector<Polynomial> subst =
                first_chart ? std::vector<Polynomial>{u, u * w} : std::vector<Polynomial>{u * w, w};

            for (const auto& b : through) {
                int e = 0;
                Polynomial eq = extract_axis_power(b.eq.compose(subst), child.owner_axis, &e);
                if (e != 1) throw std::logic_error("boundary curve is not smooth through the center");
                if (eq.is_constant()) continue;  // not visible in this chart
                child.boundary.push_back({b.id, std::move(eq)});
            }
            child.boundary.push_back({new_id, Polynomial::variable(2, child.owner_axis)});

            int se = 0;
            child.strict = extract_axis_power(state.strict.compose(subst), child.owner_axis, &se);
            if (se != mult) throw std::logic_error("strict transform extraction mismatch");

            examine(child, /*origin_only=*/!first_chart);
        }
    }

    // Finds the non-SNC points on the owner axis of the chart and blows
    // them up. In second charts only the origin is new; everything else was
    // already visible in the first chart.
    void examine(const ChartState& state, bool origin_only) {
        ++charts_examined;
        const int axis = state.owner_axis;
        const int param = 1 - axis;  // coordinate along the exceptional axis

        if (state.strict.is_constant()) return;  // axis crossings of boundary curves are SNC

        const univ::Dense r = univ::specialize(state.strict, param, Rational(0));
        if (univ::is_zero(r)) throw std::logic_error("strict transform divisible by the axis");

        if (origin_only) {
            const Rational r0 = univ::evaluate(r, Rational(0));
            if (!r0.is_zero()) return;
            bool bad = univ::evaluate(univ::derivative(r), Rational(0)).is_zero();
            if (!bad) {
                for (const auto& b : state.boundary) {
                    if (b.id == *state.owner) continue;
                    if (b.eq.constant_term().is_zero()) {
                        bad = true;
                        break;
                    }
                }
            }
            if (bad) blow_at(state, Rational(0), axis);
            return;
        }

        std::vector<Rational> bad_points;
        auto add_bad = [&](const Rational& t) {
            if (std::find(bad_points.begin(), bad_points.end(), t) == bad_points.end())
                bad_points.push_back(t);
        };

        // Tangency or a singular branch: multiple roots of r.
        {
            univ::Dense mult_part = univ::gcd(r, univ::derivative(r));
            if (univ::degree(mult_part) > 0) {
                std::map<Rational, int> roots;
                univ::Dense residual = univ::strip_rational_roots(mult_part, &roots);
                if (univ::degree(residual) > 0) ground_field_fail(state, residual, param);
                for (const auto& [root, m] : roots) add_bad(root);
            }
        }
        // Strict transform passing through a crossing with an older divisor.
        for (const auto& b : state.boundary) {
            if (b.id == *state.owner) continue;
            const univ::Dense c = univ::specialize(b.eq, param, Rational(0));
            univ::Dense g = univ::gcd(r, c);
            if (univ::degree(g) > 0) {
                std::map<Rational, int> roots;
                univ::Dense residual = univ::strip_rational_roots(g, &roots);
                if (univ::degree(residual) > 0) ground_field_fail(state, residual, param);
                for (const auto& [root, m] : roots) add_bad(root);
            }
        }

        std::sort(bad_points.begin(), bad_points.end());
        for (const auto& t : bad_points) blow_at(state, t, axis);
    }

    void blow_at(const ChartState& state, const Rational& t, int axis) {
        ChartState next;
        const Rational da = (axis == kX) ? Rational(0) : t;
        const Rational db = (axis == kX) ? t : Rational(0);
        next.map = state.map;
        if (!da.is_zero() || !db.is_zero()) next.map.push_back(ChartStep::translate(da, db));
        next.owner = state.owner;
        next.owner_axis = state.owner_axis;
        const std::vector<Rational> shift{da, db};
        for (const auto& b : state.boundary) {
            Polynomial eq = b.eq.translate(shift);
            if (!eq.constant_term().is_zero()) continue;
            next.boundary.push_back({b.id, std::move(eq)});
        }
        next.strict = state.strict.translate(shift);
        blow_up(next);
    }
};

}  // namespace

Polynomial ResolutionTree::centered_equation() const {
    return curve_.equation.translate(center_.coords);
}

ResolutionTree ResolutionTree::resolve(const PlaneCurve& curve, const RationalPoint& center,
                                       int max_blowups) {
    if (center.arity() != 2) throw std::invalid_argument("resolve: center must be a plane point");
    ResolutionTree tree;
    tree.curve_ = curve;
    tree.center_ = center;

    const Polynomial h0 = curve.equation.translate(center.coords);
    if (!h0.constant_term().is_zero())
        throw std::invalid_argument("resolve: the center does not lie on the curve");
    if (h0.order() >= 2) {
        Resolver resolver(h0, max_blowups);
        ChartState root;
        root.strict = h0;
        resolver.blow_up(root);
        tree.divisors_ = std::move(resolver.divisors);
        tree.certificate_ = SncCertificate{resolver.blowups, resolver.charts_examined};
    }
    return tree;
}

long ResolutionTree::ord_divisor(int id, const Polynomial& p) const {
    if (p.is_zero()) throw std::domain_error("ord_divisor: zero polynomial");
    if (id < 1 || id > static_cast<int>(divisors_.size()))
        throw std::out_of_range("ord_divisor: no such divisor");
    const auto& div = divisors_[static_cast<size_t>(id - 1)];
    const Polynomial centered = p.translate(center_.coords);
    return pullback(centered, div.chart).min_exponent(div.axis);
}

long ResolutionTree::jacobian_discrepancy(int id) const {
    if (id < 1 || id > static_cast<int>(divisors_.size()))
        throw std::out_of_range("jacobian_discrepancy: no such divisor");
    const auto& div = divisors_[static_cast<size_t>(id - 1)];
    const Polynomial fx = pullback(Polynomial::variable(2, kX), div.chart);
    const Polynomial fy = pullback(Polynomial::variable(2, kY), div.chart);
    const Polynomial jac = partial_derivative(fx, kX) * partial_derivative(fy, kY) -
                           partial_derivative(fx, kY) * partial_derivative(fy, kX);
    return jac.min_exponent(div.axis);
}

Rational ResolutionTree::lct() const {
    Rational best(1);
    for (const auto& d : divisors_) {
        const Rational cand(d.discrepancy + 1, d.ord_curve);
        if (cand < best) best = cand;
    }
    return best;
}

ResolutionTree ResolutionTree::with_extra_blowup(int divisor_id, const Rational& position) const {
    if (divisor_id < 1 || divisor_id > static_cast<int>(divisors_.size()))
        throw std::out_of_range("with_extra_blowup: no such divisor");
    const auto& base = divisors_[static_cast<size_t>(divisor_id - 1)];

    ExceptionalDivisor div;
    div.id = static_cast<int>(divisors_.size()) + 1;
    div.chart = base.chart;
    const Rational da = (base.axis == kX) ? Rational(0) : position;
    const Rational db = (base.axis == kX) ? position : Rational(0);
    if (!da.is_zero() || !db.is_zero()) div.chart.push_back(ChartStep::translate(da, db));
    div.chart.push_back(ChartStep::blow_first());
    div.axis = kX;
    div.parent = base.id;

    const Polynomial px = pullback(Polynomial::variable(2, kX), div.chart);
    const Polynomial py = pullback(Polynomial::variable(2, kY), div.chart);
    div.ord_center = std::min(px.min_exponent(kX), py.min_exponent(kX));
    div.ord_curve = pullback(centered_equation(), div.chart).min_exponent(kX);

    const Polynomial jac = partial_derivative(px, kX) * partial_derivative(py, kY) -
                           partial_derivative(px, kY) * partial_derivative(py, kX);
    div.discrepancy = jac.min_exponent(kX);

    ResolutionTree tree = *this;
    tree.divisors_.push_back(std::move(div));
    tree.certificate_.blowups += 1;
    tree.certificate_.charts_examined += 2;
    return tree;
}

}  // namespace hodge
