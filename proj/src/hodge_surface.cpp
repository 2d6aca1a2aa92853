#include "hodge/hodge_surface.hpp"

#include "hodge/univariate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hodge {

namespace {
constexpr int kX = 0;
constexpr int kY = 1;
}  // namespace

GeneratorSet jk_generators(const Polynomial& h, const GeneratorSet& i0, int k) {
    if (h.arity() != 2) throw std::invalid_argument("jk_generators: surface pipeline needs arity 2");
    if (k < 0) throw std::invalid_argument("jk_generators: negative level");
    GeneratorSet out;
    out.center = i0.center;
    for (const auto& g : i0.generators) {
        for (const auto& beta : monomial_basis(2, k + 1)) {
            Polynomial d = twisted_derivative(g, h, beta, k);
            if (!d.is_zero()) out.generators.push_back(std::move(d));
        }
    }
    if (out.generators.empty())
        throw std::invalid_argument("jk_generators: no nonzero generators produced");
    return out;
}

HodgeIdealFamily hodge_ideals(const PlaneCurve& curve, const RationalPoint& center, int kmax,
                              int cap) {
    return hodge_ideals(curve, ResolutionTree::resolve(curve, center), kmax, cap);
}

HodgeIdealFamily hodge_ideals(const PlaneCurve& curve, const ResolutionTree& tree, int kmax,
                              int cap) {
    if (curve.equation.arity() != 2)
        throw std::invalid_argument("hodge_ideals: the identification of I_k with J_k holds on "
                                    "surfaces only; refusing non-surface input");
    if (kmax < 0) throw std::invalid_argument("hodge_ideals: negative kmax");
    const RationalPoint& center = tree.center();
    if (!curve.equation.evaluate(center.coords).is_zero())
        throw std::invalid_argument("hodge_ideals: center does not lie on the curve");

    HodgeIdealFamily family;
    family.curve = curve;
    family.center = center;
    family.kmax = kmax;
    family.smooth_center = tree.empty();

    if (family.smooth_center) {
        for (int k = 0; k <= kmax; ++k) family.ideals.push_back(JetIdeal::unit(center));
        return family;
    }

    const Polynomial& h = curve.equation;
    const JetIdeal i0 = multiplier_ideal(tree);
    family.ideals.push_back(i0);
    GeneratorSet i0gens{i0.generators(), center};
    for (int k = 1; k <= kmax; ++k) {
        GeneratorSet gens = jk_generators(h, i0gens, k);
        family.ideals.push_back(JetIdeal::from_generators(gens, 0, cap));
    }

    // Structural invariants of the family; violations are bugs.
    for (int k = 1; k <= kmax; ++k) {
        if (!family.ideal(k - 1).contains(family.ideal(k)))
            throw std::logic_error("hodge_ideals: descending chain violated");
        for (const auto& g : family.ideal(k - 1).generators())
            if (!family.ideal(k).member(g * h))
                throw std::logic_error("hodge_ideals: twist inclusion violated");
    }
    for (int k = 0; k <= kmax; ++k) {
        if (!family.ideal(k).member(h.pow(k + 1)))
            throw std::logic_error("hodge_ideals: curve power membership violated");
    }
    return family;
}

namespace {

JetIdeal jacobian_extended(const JetIdeal& ideal) {
    // Jac(I): I together with all first partials of its generators.
    std::vector<Polynomial> gens = ideal.generators();
    const size_t base = gens.size();
    for (size_t i = 0; i < base; ++i) {
        for (int var = 0; var < 2; ++var) {
            Polynomial d = partial_derivative(gens[i], var);
            if (!d.is_zero()) gens.push_back(std::move(d));
        }
    }
    return JetIdeal::from_generators(GeneratorSet{std::move(gens), ideal.center()});
}

std::string ideal_brief(const JetIdeal& ideal) {
    std::ostringstream os;
    os << "(";
    const auto strs = ideal.generator_strings();
    for (size_t i = 0; i < strs.size(); ++i) {
        if (i) os << ", ";
        os << strs[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

VerificationReport verify_theorems(const HodgeIdealFamily& family, const ResolutionTree& tree) {
    VerificationReport report;
    const RationalPoint& center = family.center;
    const Polynomial& h = family.curve.equation;
    const int kmax = family.kmax;
    const long m = order_at_center(h, center);
    const bool node = (m == 2 && tree.divisors().size() == 1);

    auto push = [&](std::string name, int k, bool pass, bool vacuous, std::string detail) {
        report.checks.push_back({std::move(name), k, pass, vacuous, std::move(detail)});
    };
    auto power_ideal = [&](long q) { return JetIdeal::maximal_power(center, q); };

    for (int k = 1; k <= kmax; ++k) {
        const bool ok = family.ideal(k - 1).contains(family.ideal(k));
        push("descending_chain", k, ok, false, "I_k inside I_{k-1}");
    }
    for (int k = 0; k <= kmax; ++k) {
        const bool ok = family.ideal(k).member(h.pow(k + 1));
        push("curve_power_membership", k, ok, false, "h^(k+1) in I_k");
    }
    for (int k = 1; k <= kmax; ++k) {
        bool ok = true;
        for (const auto& g : family.ideal(k - 1).generators()) ok = ok && family.ideal(k).member(g * h);
        push("twist_inclusion", k, ok, false, "h * I_{k-1} inside I_k");
    }

    // Containment in the adjoint ideal for k >= 1.
    if (!tree.empty()) {
        const JetIdeal adj = adjoint_ideal(tree);
        for (int k = 1; k <= kmax; ++k) {
            const bool ok = adj.contains(family.ideal(k));
            push("adjoint_containment", k, ok, false, "I_k inside adj = " + ideal_brief(adj));
        }
    } else {
        for (int k = 1; k <= kmax; ++k)
            push("adjoint_containment", k, true, true, "smooth center, adjoint trivial");
    }

    // Symbolic power bound at the center point (codimension 2 on a surface).
    for (int k = 0; k <= kmax; ++k) {
        const long q = std::max(0L, std::min(m - 1, (k + 1) * m - 2));
        const bool vac = (q == 0);
        const bool ok = vac || power_ideal(q).contains(family.ideal(k));
        push("symbolic_power_bound", k, ok, vac,
             "I_k inside m^" + std::to_string(q) + " with q = min(m-1, (k+1)m-2)");
    }

    // Multiplicity bounds for singular centers.
    for (int k = 0; k <= kmax; ++k) {
        if (m < 2) {
            push("multiplicity_bound", k, true, true, "smooth center");
            continue;
        }
        const long e = (k + 1) * (m - 1) - 1;
        const bool vac = (e <= 0);
        const bool ok = vac || power_ideal(e).contains(family.ideal(k));
        push("multiplicity_bound", k, ok, vac, "I_k inside m^((k+1)(m-1)-1)");
    }
    for (int k = 0; k <= kmax; ++k) {
        if (m != 2 || node) {
            push("non_node_refinement", k, true, true,
                 node ? "node is exempt" : "multiplicity is not 2");
            continue;
        }
        const bool ok = power_ideal(k + 1).contains(family.ideal(k));
        push("non_node_refinement", k, ok, false, "I_k inside m^(k+1) for a non-nodal double point");
    }
    for (int k = 0; k <= kmax; ++k) {
        const long j = (k + 1) * (m - 2);
        if (m < 2 || j < 1) {
            push("order_bound", k, true, true, "bound is vacuous");
            continue;
        }
        const bool ok = power_ideal(j).contains(family.ideal(k));
        push("order_bound", k, ok, false, "I_k inside m^((k+1)(m-2))");
    }

    // J_k multiplicity estimate through the order of I_0.
    {
        const long mprime = family.ideal(0).order();
        for (int k = 0; k <= kmax; ++k) {
            const long e = static_cast<long>(k) * (m - 1) + mprime;
            const bool vac = (e <= 0);
            const bool ok = vac || power_ideal(e).contains(family.ideal(k));
            push("jet_multiplicity_estimate", k, ok, vac,
                 "I_k inside m^(k(m-1)+" + std::to_string(mprime) + ")");
        }
    }

    // Derivative recursion: J_{k+1} inside h*Jac(J_k) + J_k*Jac((h)).
    for (int k = 1; k <= kmax; ++k) {
        const JetIdeal& prev = family.ideal(k - 1);
        if (prev.is_unit() && family.ideal(k).is_unit()) {
            push("derivative_recursion", k, true, true, "both levels trivial");
            continue;
        }
        std::vector<Polynomial> gens;
        const JetIdeal jac_prev = jacobian_extended(prev);
        for (const auto& t : jac_prev.generators()) gens.push_back(h * t);
        const std::vector<Polynomial> jac_h{h, partial_derivative(h, kX), partial_derivative(h, kY)};
        for (const auto& g : prev.generators())
            for (const auto& w : jac_h) gens.push_back(g * w);
        const JetIdeal rhs = JetIdeal::from_generators(GeneratorSet{std::move(gens), center});
        const bool ok = rhs.contains(family.ideal(k));
        push("derivative_recursion", k, ok, false, "rhs = " + ideal_brief(rhs));
    }

    // Nontriviality: a singular center forces I_k nontrivial for k >= 1;
    // a smooth center keeps every ideal trivial.
    {
        bool ok = true;
        for (int k = 0; k <= kmax; ++k) {
            if (m >= 2 && k >= 1) ok = ok && !family.ideal(k).is_unit();
            if (m <= 1) ok = ok && family.ideal(k).is_unit();
        }
        push("singularity_detection", -1, ok, kmax == 0 && m >= 2,
             m >= 2 ? "singular center: I_k nontrivial for k >= 1" : "smooth center: all I_k trivial");
    }

    // Log canonicity through the threshold.
    {
        const Rational lct = tree.lct();
        const bool ok = family.ideal(0).is_unit() == (lct >= Rational(1));
        push("log_canonical_iff", -1, ok, false, "I_0 trivial iff lct >= 1; lct = " + lct.str());
    }

    return report;
}

namespace {

// Rational singular points on the axis-parallel line components, with exact
// detection of irrational ones.
void line_component_points(const Polynomial& h, const univ::Dense& content, int line_var,
                           std::set<RationalPoint>& out) {
    // content is univariate in line_var; its roots y0 give lines
    // {line_var = y0} contained in the curve.
    if (univ::degree(content) <= 0) return;
    std::map<Rational, int> roots;
    univ::Dense residual = univ::strip_rational_roots(content, &roots);

    const int other = 1 - line_var;
    for (const auto& [y0, mult] : roots) {
        Polynomial line(2);
        line = Polynomial::variable(2, line_var) - Polynomial::constant(2, y0);
        auto q = h.divide_exact(line);
        if (!q) throw std::logic_error("line component does not divide the curve");
        const univ::Dense w = univ::specialize(*q, other, y0);
        if (univ::degree(w) <= 0) continue;  // the line meets nothing
        std::map<Rational, int> cross;
        univ::Dense res2 = univ::strip_rational_roots(w, &cross);
        if (univ::degree(res2) > 0)
            throw GroundFieldError("singular point with non-rational coordinate on a line "
                                   "component: factor " + univ::to_polynomial(res2, 2, other).render());
        for (const auto& [x0, cm] : cross) {
            RationalPoint p = RationalPoint::origin(2);
            p.coords[static_cast<size_t>(line_var)] = y0;
            p.coords[static_cast<size_t>(other)] = x0;
            out.insert(p);
        }
    }

    if (univ::degree(residual) > 0) {
        // Lines at irrational positions: they contain singular points exactly
        // when the residual curve meets them, which is decided by
        // divisibility of the cross coefficients.
        const Polynomial content_poly = univ::to_polynomial(content, 2, line_var);
        auto rest = h.divide_exact(content_poly);
        if (!rest) throw std::logic_error("content does not divide the curve");
        const auto coeffs = univ::coefficients_in(*rest, other);
        for (size_t j = 1; j < coeffs.size(); ++j) {
            if (univ::is_zero(coeffs[j])) continue;
            auto [quot, rem] = univ::divmod(coeffs[j], residual);
            if (!univ::is_zero(rem))
                throw GroundFieldError(
                    "singular points on a line component at non-rational position: factor " +
                    univ::to_polynomial(residual, 2, line_var).render());
        }
    }
}

}  // namespace

std::vector<RationalPoint> singular_points(const PlaneCurve& curve) {
    const Polynomial& h = curve.equation;
    std::set<RationalPoint> found;

    // Split off axis-parallel line components; they are always singular
    // where they meet the rest of the curve.
    univ::Dense cy;  // content in y: product of horizontal lines
    {
        const auto coeffs = univ::coefficients_in(h, kX);
        univ::Dense g;
        for (const auto& c : coeffs) g = univ::gcd(g, c);
        cy = g;
    }
    line_component_points(h, cy, kY, found);

    Polynomial h1 = h;
    if (univ::degree(cy) > 0) {
        auto q = h.divide_exact(univ::to_polynomial(cy, 2, kY));
        h1 = *q;
    }
    univ::Dense cx;
    {
        const auto coeffs = univ::coefficients_in(h1, kY);
        univ::Dense g;
        for (const auto& c : coeffs) g = univ::gcd(g, c);
        cx = g;
    }
    line_component_points(h, cx, kX, found);

    Polynomial h0 = h1;
    if (univ::degree(cx) > 0) {
        auto q = h1.divide_exact(univ::to_polynomial(cx, 2, kX));
        h0 = *q;
    }

    // Main part: no axis-parallel factors left. Scan the critical values of
    // a projection; a shear that certifies completeness always exists.
    if (h0.degree() >= 1) {
        bool certified = false;
        long shear = 0;
        for (int attempt = 0; attempt < 48 && !certified; ++attempt) {
            const Rational s(shear);
            shear = (shear > 0) ? -shear : -shear + 1;  // 0, 1, -1, 2, -2, ...

            Polynomial hs = h0;
            if (!s.is_zero()) {
                const Polynomial x = Polynomial::variable(2, kX);
                const Polynomial y = Polynomial::variable(2, kY);
                hs = h0.compose({x + s * y, y});
            }
            const Polynomial hsx = partial_derivative(hs, kX);
            const Polynomial hsy = partial_derivative(hs, kY);
            if (hsy.is_zero()) {
                // Sheared curve independent of y: parallel lines, smooth.
                certified = true;
                break;
            }
            const univ::Dense crit = univ::resultant_bivariate(hs, hsy, kY);
            if (univ::is_zero(crit)) continue;  // sheared-vertical line factor; try again

            // Singular points project onto multiple roots of the critical
            // polynomial, so only its repeated part needs root extraction.
            univ::Dense mult_part = univ::gcd(crit, univ::derivative(crit));
            std::map<Rational, int> critical_roots;
            univ::Dense leftover = mult_part;
            if (univ::degree(mult_part) > 0)
                leftover = univ::strip_rational_roots(mult_part, &critical_roots);

            std::set<RationalPoint> points_here;
            for (const auto& [x0, mult] : critical_roots) {
                univ::Dense f0 = univ::specialize(hs, kY, x0);
                univ::Dense f1 = univ::specialize(hsx, kY, x0);
                univ::Dense f2 = univ::specialize(hsy, kY, x0);
                univ::Dense common = univ::gcd(univ::gcd(f0, f1), f2);
                if (univ::degree(common) <= 0) continue;
                std::map<Rational, int> ys;
                univ::Dense residual = univ::strip_rational_roots(common, &ys);
                if (univ::degree(residual) > 0)
                    throw GroundFieldError(
                        "singular point with non-rational coordinate: factor " +
                        univ::to_polynomial(residual, 2, kY).render());
                for (const auto& [y0, ym] : ys) {
                    // Undo the shear: (x, y) on hs corresponds to (x + s*y, y).
                    RationalPoint p(std::vector<Rational>{x0 + s * y0, y0});
                    points_here.insert(p);
                }
            }

            // Certification: if no irrational multiple roots remain, the
            // rational scan above saw every singular point.
            if (univ::degree(leftover) <= 0) {
                found.insert(points_here.begin(), points_here.end());
                certified = true;
            }
        }
        if (!certified)
            throw GroundFieldError(
                "could not certify the rational singular locus over Q after 48 projections");
    }

    return std::vector<RationalPoint>(found.begin(), found.end());
}

}  // namespace hodge
