#include "hodge/projective.hpp"

#include "hodge/univariate.hpp"
#include "hodge/valuation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hodge {

namespace {

// Dehomogenize by setting the chart variable to 1; remaining variables keep
// their relative order.
Polynomial dehomogenize(const Polynomial& h, int chart) {
    const int arity = h.arity();
    Polynomial out(arity - 1);
    for (const auto& [m, c] : h.terms()) {
        Monomial reduced = Monomial::unit(arity - 1);
        int j = 0;
        for (int i = 0; i < arity; ++i) {
            if (i == chart) continue;
            reduced.exp[static_cast<size_t>(j++)] = m.exp[static_cast<size_t>(i)];
        }
        out.add_term(reduced, c);
    }
    return out;
}

bool univariate_squarefree(const univ::Dense& p) {
    if (univ::degree(p) <= 0) return true;
    return univ::degree(univ::gcd(p, univ::derivative(p))) <= 0;
}

// Certify squarefreeness of a polynomial with no variable factors by
// restricting to rational lines: a line on which the polynomial keeps full
// degree and has squarefree restriction certifies it. Sound always;
// complete on any input a generic line works for.
bool certify_squarefree_by_lines(const Polynomial& h) {
    const int arity = h.arity();
    const int d = h.degree();
    std::vector<std::vector<Rational>> bases;
    for (long trial = 0; trial < 40; ++trial) {
        std::vector<Rational> p0;
        for (int i = 0; i < arity; ++i)
            p0.emplace_back(1 + ((trial + i * 3) % 7));
        if (h.evaluate(p0).is_zero()) continue;
        for (long wseed = 0; wseed < 40; ++wseed) {
            std::vector<Polynomial> line;
            const Polynomial t = Polynomial::variable(1, 0);
            for (int i = 0; i < arity; ++i) {
                // direction from a small deterministic grid
                const long wi = ((wseed + 1) * (i + 1) + wseed / 5) % 5;
                line.push_back(Polynomial::constant(1, p0[static_cast<size_t>(i)]) +
                               Rational(wi) * t);
            }
            const Polynomial restricted = h.compose(line);
            if (restricted.degree() != d) continue;
            const univ::Dense dense = univ::from_polynomial(restricted);
            if (univariate_squarefree(dense)) return true;
        }
    }
    return false;
}

bool homogeneous_squarefree(const Polynomial& h, int n) {
    Polynomial rest = h;
    for (int var = 0; var < h.arity(); ++var) {
        const int e = rest.min_exponent(var);
        if (e >= 2) return false;
        if (e == 1) {
            auto q = rest.divide_exact(Polynomial::variable(h.arity(), var));
            rest = *q;
        }
    }
    if (rest.degree() < 1) return true;
    if (n == 2) {
        // Exact via the affine bivariate test: factors other than the chart
        // variable survive dehomogenization.
        return is_squarefree(dehomogenize(rest, 0));
    }
    return certify_squarefree_by_lines(rest);
}

int pick_chart(const RationalPoint& p) {
    for (int i = 0; i < p.arity(); ++i)
        if (!p.coords[static_cast<size_t>(i)].is_zero()) return i;
    throw std::invalid_argument("projective point must have a nonzero coordinate");
}

RationalPoint affine_coords(const RationalPoint& p, int chart) {
    const Rational& scale = p.coords[static_cast<size_t>(chart)];
    std::vector<Rational> out;
    for (int i = 0; i < p.arity(); ++i) {
        if (i == chart) continue;
        out.push_back(p.coords[static_cast<size_t>(i)] / scale);
    }
    return RationalPoint(std::move(out));
}

}  // namespace

RationalPoint normalize_projective(const RationalPoint& p) {
    const int chart = pick_chart(p);
    const Rational scale = p.coords[static_cast<size_t>(chart)];
    std::vector<Rational> out;
    for (const auto& c : p.coords) out.push_back(c / scale);
    return RationalPoint(std::move(out));
}

ProjectiveHypersurface ProjectiveHypersurface::make(Polynomial equation, Mode mode,
                                                    std::vector<DeclaredPoint> declared) {
    if (equation.arity() < 3)
        throw std::invalid_argument("projective hypersurface needs at least 3 homogeneous variables");
    if (equation.is_zero() || !equation.is_homogeneous() || equation.degree() < 1)
        throw std::invalid_argument("projective hypersurface equation must be homogeneous and nonconstant");

    ProjectiveHypersurface h;
    h.n = equation.arity() - 1;
    h.degree = equation.degree();
    h.mode = mode;

    if (!homogeneous_squarefree(equation, h.n))
        throw std::invalid_argument("projective hypersurface equation must be squarefree "
                                    "(or could not be certified so)");
    h.equation = std::move(equation);

    if (mode == Mode::Declared) {
        for (auto& p : declared) {
            if (p.homogeneous.arity() != h.n + 1)
                throw std::invalid_argument("declared point has wrong coordinate count");
            p.homogeneous = normalize_projective(p.homogeneous);
            if (!h.equation.evaluate(p.homogeneous.coords).is_zero())
                throw std::invalid_argument("declared point does not lie on the hypersurface");
            const int chart = pick_chart(p.homogeneous);
            const Polynomial local = dehomogenize(h.equation, chart)
                                         .translate(affine_coords(p.homogeneous, chart).coords);
            if (local.order() != p.multiplicity)
                throw std::invalid_argument("declared multiplicity does not match the equation");
            // Ordinariness: the projectivized tangent cone must be smooth.
            // Its squarefreeness is certified; smoothness beyond that is
            // taken on trust in dimension >= 3.
            const Polynomial cone = local.lowest_form();
            if (h.n == 2) {
                const univ::Dense c0 = univ::specialize(cone, 0, Rational(1));
                const univ::Dense c1 = univ::specialize(cone, 1, Rational(1));
                if (!univariate_squarefree(c0) || !univariate_squarefree(c1))
                    throw std::invalid_argument("declared point is not ordinary (tangent cone)");
            } else if (!certify_squarefree_by_lines(cone)) {
                throw std::invalid_argument("declared point tangent cone could not be certified reduced");
            }
        }
        // Deduplicate declared points.
        std::sort(declared.begin(), declared.end(), [](const DeclaredPoint& a, const DeclaredPoint& b) {
            return a.homogeneous < b.homogeneous;
        });
        declared.erase(std::unique(declared.begin(), declared.end(),
                                   [](const DeclaredPoint& a, const DeclaredPoint& b) {
                                       return a.homogeneous == b.homogeneous;
                                   }),
                       declared.end());
        h.declared = std::move(declared);
    }
    return h;
}

SubschemeZk assemble_Zk(const ProjectiveHypersurface& h, int k) {
    if (k < 0) throw std::invalid_argument("assemble_Zk: negative level");
    SubschemeZk zk;
    zk.k = k;

    if (h.mode == ProjectiveHypersurface::Mode::Computed) {
        if (h.n != 2)
            throw std::invalid_argument("computed mode is implemented for plane curves only; "
                                        "declare ordinary points in higher dimension");
        std::map<RationalPoint, int> seen;  // normalized point -> chart found in
        for (int chart = 0; chart <= h.n; ++chart) {
            const Polynomial affine = dehomogenize(h.equation, chart);
            if (affine.degree() < 1) continue;
            const PlaneCurve curve = PlaneCurve::from_polynomial(affine);
            for (const auto& pt : singular_points(curve)) {
                std::vector<Rational> proj;
                for (int i = 0, j = 0; i <= h.n; ++i) {
                    if (i == chart)
                        proj.push_back(Rational(1));
                    else
                        proj.push_back(pt.coords[static_cast<size_t>(j++)]);
                }
                const RationalPoint norm = normalize_projective(RationalPoint(std::move(proj)));
                seen.try_emplace(norm, chart);
            }
        }
        for (const auto& [norm, found_chart] : seen) {
            ZkPoint zp;
            zp.homogeneous = norm;
            zp.chart = pick_chart(norm);
            zp.affine = affine_coords(norm, zp.chart);
            const Polynomial affine_eq = dehomogenize(h.equation, zp.chart);
            const PlaneCurve curve = PlaneCurve::from_polynomial(affine_eq);
            zp.multiplicity = order_at_center(affine_eq, zp.affine);
            const HodgeIdealFamily family = hodge_ideals(curve, zp.affine, k);
            zp.local_ideal = family.ideal(k);
            zk.points.push_back(std::move(zp));
        }
        return zk;
    }

    // Declared mode: exact closed form needs mk < n at every point.
    for (const auto& dp : h.declared) {
        if (dp.multiplicity * k >= h.n)
            throw std::invalid_argument(
                "declared mode requires m*k < n at every point (exact closed-form range); "
                "point " + dp.homogeneous.str() + " violates it for k = " + std::to_string(k));
        ZkPoint zp;
        zp.homogeneous = dp.homogeneous;
        zp.chart = pick_chart(dp.homogeneous);
        zp.affine = affine_coords(dp.homogeneous, zp.chart);
        zp.multiplicity = dp.multiplicity;
        const long e = (k + 1) * dp.multiplicity - h.n;
        zp.local_ideal = JetIdeal::maximal_power(zp.affine, std::max(0L, e));
        zk.points.push_back(std::move(zp));
    }
    std::sort(zk.points.begin(), zk.points.end(),
              [](const ZkPoint& a, const ZkPoint& b) { return a.homogeneous < b.homogeneous; });
    return zk;
}

CheckEntry check_triviality_bound(const ProjectiveHypersurface& h, const SubschemeZk& zk) {
    CheckEntry e;
    e.name = "triviality_bound";
    const long z = zk.dimension();
    const long bound = h.n - (static_cast<long>(zk.k) + 1) * h.degree + 1;
    std::ostringstream os;
    os << "dim Z_k = " << z << ", n - (k+1)d + 1 = " << bound;
    if (z < bound) {
        e.pass = zk.empty();
        os << "; hypothesis holds, Z_k must be empty";
    } else {
        e.pass = true;
        e.vacuous = true;
        os << "; hypothesis fails, nothing to check";
    }
    e.detail = os.str();
    return e;
}

CheckEntry check_degree_bound(const ProjectiveHypersurface& h, const SubschemeZk& zk) {
    CheckEntry e;
    e.name = "degree_bound";
    const long z = zk.dimension();
    const long hypothesis = h.n - (static_cast<long>(zk.k) + 1) * h.degree + 1;
    if (zk.empty() || z < hypothesis) {
        e.pass = true;
        e.vacuous = true;
        e.detail = "Z_k empty or below the dimension hypothesis (deg(empty) = -1)";
        return e;
    }
    const mpz_class bound = binomial((static_cast<long>(zk.k) + 1) * h.degree - 1, h.n - z);
    const long deg = zk.degree();
    e.pass = mpz_class(deg) <= bound;
    std::ostringstream os;
    os << "deg Z_k = " << deg << " <= C((k+1)d-1, n-z_k) = " << bound.get_str();
    e.detail = os.str();
    return e;
}

std::pair<long, long> evaluation_rank(const ProjectiveHypersurface& h, const SubschemeZk& zk,
                                      long form_degree, std::optional<long> jet_level) {
    struct Target {
        const ZkPoint* point;
        JetIdeal ideal;
        int trunc;  // M0 of the ideal: jets live in O/m^M0
        long offset;
    };
    std::vector<Target> targets;
    long total_cols = 0;
    for (const auto& p : zk.points) {
        JetIdeal ideal = jet_level ? JetIdeal::maximal_power(p.affine, *jet_level) : p.local_ideal;
        if (ideal.is_unit()) continue;
        const int m0 = ideal.primary_bound();
        Target t{&p, std::move(ideal), m0, total_cols};
        total_cols += jet_dimension(h.n, m0);
        targets.push_back(std::move(t));
    }
    if (targets.empty()) return {0, 0};

    RowSpan ideal_span(total_cols);
    long ideal_dim = 0;
    for (const auto& t : targets) {
        const Index local_cols = static_cast<Index>(jet_dimension(h.n, t.trunc));
        const Mat proj = t.ideal.jet_basis().leftCols(local_cols);
        for (Index i = 0; i < proj.rows(); ++i) {
            RowVec row(total_cols);
            row.setConstant(Rational(0));
            for (Index j = 0; j < local_cols; ++j) row(t.offset + j) = proj(i, j);
            if (ideal_span.insert(row)) ++ideal_dim;
        }
    }

    RowSpan full_span(total_cols);
    long full_dim = 0;
    {
        // seed with the ideal rows
        const Mat rows = ideal_span.to_matrix();
        for (Index i = 0; i < rows.rows(); ++i)
            if (full_span.insert(rows.row(i))) ++full_dim;
    }

    for (const auto& mono : monomials_of_degree(h.n + 1, static_cast<int>(form_degree))) {
        const Polynomial form = Polynomial::from_monomial(mono, Rational(1));
        RowVec row(total_cols);
        row.setConstant(Rational(0));
        for (const auto& t : targets) {
            const Polynomial local =
                dehomogenize(form, t.point->chart).translate(t.point->affine.coords).truncate(t.trunc);
            const auto monos = monomial_basis(h.n, t.trunc);
            std::map<Monomial, Index, GradedLexLess> index;
            for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], static_cast<Index>(i));
            for (const auto& [m, c] : local.terms()) row(t.offset + index.at(m)) += c;
        }
        if (full_span.insert(row)) ++full_dim;
    }

    return {full_dim - ideal_dim, total_cols - ideal_dim};
}

CheckEntry check_independent_conditions(const ProjectiveHypersurface& h, const SubschemeZk& zk) {
    CheckEntry e;
    e.name = "independent_conditions";
    const long raw_degree = (static_cast<long>(zk.k) + 1) * h.degree - h.n - 1;
    const long ell = std::max(0L, raw_degree);
    const auto [rank, target] = evaluation_rank(h, zk, ell, std::nullopt);
    std::ostringstream os;
    os << "forms of degree " << ell << " -> rank " << rank << " of target dimension " << target;
    if (raw_degree < 0) os << " (degree clamped at 0)";
    if (target == 0) {
        e.pass = true;
        e.vacuous = true;
        e.detail = "no nontrivial local targets; " + os.str();
        return e;
    }
    e.pass = (rank == target);
    e.vacuous = (raw_degree < 0);
    e.detail = os.str();
    return e;
}

CheckEntry check_jet_separation(const ProjectiveHypersurface& h, long j) {
    CheckEntry e;
    e.name = "jet_separation";
    if (j < 1) throw std::invalid_argument("jet separation needs j >= 1");
    if (h.mode != ProjectiveHypersurface::Mode::Declared || h.n < 3) {
        e.pass = true;
        e.vacuous = true;
        e.detail = "applies to declared configurations in dimension >= 3";
        return e;
    }
    SubschemeZk s;
    long m = 0;
    for (const auto& dp : h.declared) {
        if (dp.multiplicity < 3) continue;
        m = (m == 0) ? dp.multiplicity : std::min(m, dp.multiplicity);
        ZkPoint zp;
        zp.homogeneous = dp.homogeneous;
        zp.chart = pick_chart(dp.homogeneous);
        zp.affine = affine_coords(dp.homogeneous, zp.chart);
        zp.multiplicity = dp.multiplicity;
        zp.local_ideal = JetIdeal::maximal_power(zp.affine, j);
        s.points.push_back(std::move(zp));
    }
    if (s.points.empty()) {
        e.pass = true;
        e.vacuous = true;
        e.detail = "no declared points of multiplicity >= 3";
        return e;
    }
    const long num = h.n - m + j;
    const long den = (j <= m - 1) ? m : m - 2;
    const long level = std::max(0L, (num + den - 1) / den);  // ceil for nonnegative numerator
    const long raw_degree = (level + 1) * h.degree - h.n - 1;
    const long ell = std::max(0L, raw_degree);
    const auto [rank, target] = evaluation_rank(h, s, ell, j);
    std::ostringstream os;
    os << "separating (" << j - 1 << ")-jets: level " << level << ", forms of degree " << ell
       << " -> rank " << rank << " of target dimension " << target;
    if (raw_degree < 0) os << " (degree clamped at 0)";
    e.pass = (rank == target);
    e.vacuous = (raw_degree < 0);
    e.detail = os.str();
    return e;
}

}  // namespace hodge
