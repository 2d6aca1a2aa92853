#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/projective.hpp"

using namespace hodge;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};
const std::vector<std::string> P4{"x0", "x1", "x2", "x3", "x4"};
const std::vector<std::string> P3{"x0", "x1", "x2", "x3"};

ProjectiveHypersurface computed(const std::string& eq, const std::vector<std::string>& vars) {
    return ProjectiveHypersurface::make(parse_polynomial(eq, vars),
                                        ProjectiveHypersurface::Mode::Computed);
}

DeclaredPoint point(std::vector<long> coords, long m) {
    std::vector<Rational> c;
    for (long v : coords) c.emplace_back(v);
    return DeclaredPoint{RationalPoint(std::move(c)), m};
}

}  // namespace

TEST_CASE("validation rejects bad input") {
    CHECK_THROWS(computed("x^2 + y^3", XYZ));          // not homogeneous
    CHECK_THROWS(computed("x^2*(y + z)", XYZ));        // not squarefree
    CHECK_THROWS(computed("(x + y)^2*z", XYZ));        // not squarefree
    CHECK_NOTHROW(computed("x*y*z", XYZ));
    CHECK_NOTHROW(computed("x^2*y + y^2*z + z^2*x", XYZ));

    // Declared-point validation.
    const Polynomial quartic =
        parse_polynomial("x0*(x1^3 + x2^3 + x3^3 + x4^3) + x1^4 + x2^4 + x3^4 + x4^4", P4);
    CHECK_THROWS(ProjectiveHypersurface::make(quartic, ProjectiveHypersurface::Mode::Declared,
                                              {point({0, 1, 1, 1, 1}, 3)}));  // off the surface
    CHECK_THROWS(ProjectiveHypersurface::make(quartic, ProjectiveHypersurface::Mode::Declared,
                                              {point({1, 0, 0, 0, 0}, 2)}));  // wrong multiplicity
    CHECK_NOTHROW(ProjectiveHypersurface::make(quartic, ProjectiveHypersurface::Mode::Declared,
                                               {point({1, 0, 0, 0, 0}, 3)}));
}

TEST_CASE("three coordinate lines in the plane") {
    const ProjectiveHypersurface h = computed("x*y*z", XYZ);
    CHECK(h.degree == 3);
    CHECK(h.n == 2);

    // The three pairwise intersections are nodes; I_0 is trivial there.
    const SubschemeZk z0 = assemble_Zk(h, 0);
    CHECK(z0.points.size() == 3);
    CHECK(z0.empty());
    CHECK(z0.dimension() == -1);
    CHECK(check_triviality_bound(h, z0).pass);

    const SubschemeZk z1 = assemble_Zk(h, 1);
    CHECK(z1.dimension() == 0);
    CHECK(z1.degree() == 3);

    const CheckEntry triv = check_triviality_bound(h, z1);
    CHECK(triv.pass);
    CHECK(triv.vacuous);  // 0 >= 2 - 6 + 1

    const CheckEntry deg = check_degree_bound(h, z1);
    CHECK(deg.pass);
    CHECK_FALSE(deg.vacuous);  // 3 <= C(5, 2) = 10

    const CheckEntry indep = check_independent_conditions(h, z1);
    CHECK(indep.pass);
    const auto [rank, target] = evaluation_rank(h, z1, 3);
    CHECK(rank == 3);
    CHECK(target == 3);

    // Cubics separate 1-jets at the three nodes (evaluation machinery).
    const auto [jrank, jtarget] = evaluation_rank(h, z1, 3, 2L);
    CHECK(jrank == 9);
    CHECK(jtarget == 9);
}

TEST_CASE("cuspidal cubic in the plane") {
    const ProjectiveHypersurface h = computed("z*y^2 - x^3", XYZ);
    const SubschemeZk z1 = assemble_Zk(h, 1);
    REQUIRE(z1.points.size() == 1);
    CHECK(z1.degree() == 4);  // colength of (u^2, u*v, v^3)
    CHECK(z1.points[0].multiplicity == 2);

    CHECK(check_triviality_bound(h, z1).pass);
    const CheckEntry deg = check_degree_bound(h, z1);
    CHECK(deg.pass);  // 4 <= C(5, 2) = 10

    const auto [rank, target] = evaluation_rank(h, z1, 3);
    CHECK(rank == 4);
    CHECK(target == 4);
    CHECK(check_independent_conditions(h, z1).pass);
}

TEST_CASE("smooth conic: everything empty and vacuous") {
    const ProjectiveHypersurface h = computed("x^2 + y^2 - z^2", XYZ);
    for (int k = 0; k <= 2; ++k) {
        const SubschemeZk zk = assemble_Zk(h, k);
        CHECK(zk.points.empty());
        CHECK(zk.dimension() == -1);
        CHECK(check_triviality_bound(h, zk).pass);
        CHECK(check_degree_bound(h, zk).pass);
        CHECK(check_independent_conditions(h, zk).pass);
    }
}

TEST_CASE("two nodes with all coordinates nonzero: chart consistency") {
    // (xy - z^2)(x - y) has nodes at [1:1:1] and [1:1:-1].
    const ProjectiveHypersurface h = computed("(x*y - z^2)*(x - y)", XYZ);
    const SubschemeZk z1 = assemble_Zk(h, 1);
    REQUIRE(z1.points.size() == 2);
    CHECK(z1.degree() == 2);

    // Homogenization consistency: the local ideal computed in another chart
    // has the same colength.
    for (const auto& zp : z1.points) {
        for (int chart = 0; chart <= 2; ++chart) {
            if (zp.homogeneous.coords[static_cast<size_t>(chart)].is_zero()) continue;
            const Rational scale = zp.homogeneous.coords[static_cast<size_t>(chart)];
            std::vector<Rational> affine;
            for (int i = 0; i <= 2; ++i) {
                if (i == chart) continue;
                affine.push_back(zp.homogeneous.coords[static_cast<size_t>(i)] / scale);
            }
            Polynomial chart_eq(2);
            {
                Polynomial full = h.equation;
                std::vector<Polynomial> subst;
                int j = 0;
                for (int i = 0; i <= 2; ++i) {
                    if (i == chart)
                        subst.push_back(Polynomial::constant(2, Rational(1)));
                    else
                        subst.push_back(Polynomial::variable(2, j++));
                }
                chart_eq = full.compose(subst);
            }
            const PlaneCurve curve = PlaneCurve::from_polynomial(chart_eq);
            const HodgeIdealFamily family =
                hodge_ideals(curve, RationalPoint(affine), 1);
            CHECK(family.ideal(1).colength() == zp.local_ideal.colength());
        }
    }

    const auto [rank, target] = evaluation_rank(h, z1, 3);
    CHECK(rank == 2);
    CHECK(target == 2);
}

TEST_CASE("declared ordinary triple point on a quartic in P^4") {
    const Polynomial quartic =
        parse_polynomial("x0*(x1^3 + x2^3 + x3^3 + x4^3) + x1^4 + x2^4 + x3^4 + x4^4", P4);
    const ProjectiveHypersurface h = ProjectiveHypersurface::make(
        quartic, ProjectiveHypersurface::Mode::Declared, {point({1, 0, 0, 0, 0}, 3)});
    CHECK(h.n == 4);
    CHECK(h.degree == 4);

    const SubschemeZk z1 = assemble_Zk(h, 1);
    REQUIRE(z1.points.size() == 1);
    // Local ideal m^((k+1)m - n) = m^2 in four variables: colength 5.
    CHECK(z1.degree() == 5);

    CHECK(check_triviality_bound(h, z1).pass);
    CHECK(check_degree_bound(h, z1).pass);

    // Jet map of the independent-conditions corollary: forms of degree
    // (k+1)d - n - 1 = 3 surject onto O/m^2 at the point.
    const auto [rank, target] = evaluation_rank(h, z1, 3);
    CHECK(rank == 5);
    CHECK(target == 5);
    CHECK(check_independent_conditions(h, z1).pass);

    // k = 2 violates mk < n.
    CHECK_THROWS(assemble_Zk(h, 2));
}

TEST_CASE("declared node on a cubic in P^3") {
    const Polynomial cubic =
        parse_polynomial("x0*(x1^2 + x2^2 + x3^2) + x1*x2*x3", P3);
    const ProjectiveHypersurface h = ProjectiveHypersurface::make(
        cubic, ProjectiveHypersurface::Mode::Declared, {point({1, 0, 0, 0}, 2)});
    const SubschemeZk z1 = assemble_Zk(h, 1);
    CHECK(z1.degree() == 1);  // m^(2*2-3) = m, colength 1
    const auto [rank, target] = evaluation_rank(h, z1, 2);
    CHECK(rank == 1);
    CHECK(target == 1);
    CHECK(check_independent_conditions(h, z1).pass);
}

TEST_CASE("normalization of projective points") {
    const RationalPoint p(std::vector<Rational>{Rational(0), Rational(2), Rational(4)});
    const RationalPoint n = normalize_projective(p);
    CHECK(n.coords[0] == Rational(0));
    CHECK(n.coords[1] == Rational(1));
    CHECK(n.coords[2] == Rational(2));
}

TEST_CASE("declared mode with no singular points") {
    // Smooth cubic surface, declared with an empty point list.
    const Polynomial cubic = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3", P3);
    const ProjectiveHypersurface h =
        ProjectiveHypersurface::make(cubic, ProjectiveHypersurface::Mode::Declared, {});
    const SubschemeZk z0 = assemble_Zk(h, 0);
    CHECK(z0.points.empty());
    CHECK(z0.dimension() == -1);
    CHECK(check_triviality_bound(h, z0).pass);
    CHECK(check_degree_bound(h, z0).pass);
    CHECK(check_independent_conditions(h, z0).pass);
}

TEST_CASE("jet separation corollary on a declared configuration") {
    const Polynomial quartic =
        parse_polynomial("x0*(x1^3 + x2^3 + x3^3 + x4^3) + x1^4 + x2^4 + x3^4 + x4^4", P4);
    const ProjectiveHypersurface h = ProjectiveHypersurface::make(
        quartic, ProjectiveHypersurface::Mode::Declared, {point({1, 0, 0, 0, 0}, 3)});
    // j = 1: level ceil((4-3+1)/3) = 1, degree 2*4-5 = 3, separate 0-jets.
    const CheckEntry j1 = check_jet_separation(h, 1);
    CHECK(j1.pass);
    CHECK_FALSE(j1.vacuous);
    // j = 2: level ceil(3/3) = 1, same degree, separate 1-jets.
    const CheckEntry j2 = check_jet_separation(h, 2);
    CHECK(j2.pass);
    CHECK_FALSE(j2.vacuous);
    // j = 3 >= m: level ceil((4-3+3)/(3-2)) = 4, degree 5*4-5 = 15.
    const CheckEntry j3 = check_jet_separation(h, 3);
    CHECK(j3.pass);

    // Computed plane-curve mode: vacuous by scope.
    const ProjectiveHypersurface plane = computed("x*y*z", XYZ);
    CHECK(check_jet_separation(plane, 1).vacuous);
}

TEST_CASE("cosupport grows with the level in computed mode") {
    for (const char* eq : {"x*y*z", "z*y^2 - x^3", "(x*y - z^2)*(x - y)"}) {
        const ProjectiveHypersurface h = computed(eq, XYZ);
        const SubschemeZk z0 = assemble_Zk(h, 0);
        const SubschemeZk z1 = assemble_Zk(h, 1);
        for (size_t i = 0; i < z0.points.size(); ++i) {
            if (z0.points[i].local_ideal.is_unit()) continue;
            CHECK_FALSE(z1.points[i].local_ideal.is_unit());
            CHECK(z0.points[i].homogeneous == z1.points[i].homogeneous);
        }
    }
}
