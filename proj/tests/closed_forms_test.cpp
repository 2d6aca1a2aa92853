#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/closed_forms.hpp"
#include "hodge/hodge_surface.hpp"

using namespace hodge;

namespace {
Monomial M(std::vector<int> e) { return Monomial(std::move(e)); }
}  // namespace

TEST_CASE("snc closed form") {
    // One smooth branch: always trivial.
    CHECK(snc_hodge_ideal(3, 1, 5).is_unit());

    // Two branches: (x1, x2)^k.
    const MonomialIdeal two = snc_hodge_ideal(2, 2, 3);
    CHECK(two.generators.size() == 4);
    CHECK(two.member(M({3, 0})));
    CHECK(two.member(M({1, 2})));
    CHECK_FALSE(two.member(M({2, 0})));

    // Three branches at level one in dimension three.
    const MonomialIdeal three = snc_hodge_ideal(3, 3, 1);
    REQUIRE(three.generators.size() == 3);
    CHECK(three.member(M({1, 1, 0})));
    CHECK(three.member(M({1, 0, 1})));
    CHECK(three.member(M({0, 1, 1})));
    CHECK_FALSE(three.member(M({2, 0, 0})));

    // Level 2, r = 3, n = 4: lattice points of sum = 4 with entries <= 2.
    const MonomialIdeal big = snc_hodge_ideal(4, 3, 2);
    CHECK(big.generators.size() == 6);
    CHECK(big.is_antichain());

    CHECK_THROWS(snc_hodge_ideal(2, 3, 1));
}

TEST_CASE("generator counts match the lattice point count") {
    for (int r = 2; r <= 4; ++r) {
        for (long k = 1; k <= 3; ++k) {
            const MonomialIdeal ideal = snc_hodge_ideal(4, r, k);
            long count = 0;
            for (const auto& mono : monomials_of_degree(r, static_cast<int>(k) * (r - 1))) {
                bool ok = true;
                for (int e : mono.exp) ok = ok && e <= k;
                if (ok) ++count;
            }
            CHECK(static_cast<long>(ideal.generators.size()) == count);
            CHECK(ideal.is_antichain());
        }
    }
}

TEST_CASE("ordinary points: exact range") {
    // n=5, m=3, k=1: m^(2*3-5) = m.
    const auto r1 = ordinary_hodge_ideal({5, 3, 1});
    REQUIRE(std::holds_alternative<MonomialIdeal>(r1));
    const auto& i1 = std::get<MonomialIdeal>(r1);
    CHECK(i1.generators.size() == 5);
    CHECK(i1.member(M({1, 0, 0, 0, 0})));

    // n=4, m=2, k=1: trivial, (k+1)m - n = 0.
    const auto r2 = ordinary_hodge_ideal({4, 2, 1});
    REQUIRE(std::holds_alternative<MonomialIdeal>(r2));
    CHECK(std::get<MonomialIdeal>(r2).is_unit());

    // Plane curves, k=0: I_0 = m^(m-2).
    const auto r3 = ordinary_hodge_ideal({2, 4, 0});
    REQUIRE(std::holds_alternative<MonomialIdeal>(r3));
    CHECK(std::get<MonomialIdeal>(r3).colength() == 3);  // colength of m^2 in 2 vars
}

TEST_CASE("ordinary points: sandwich at k=1, m>=n") {
    const auto r = ordinary_hodge_ideal({3, 3, 1});
    REQUIRE(std::holds_alternative<OrdinarySandwich>(r));
    const auto& s = std::get<OrdinarySandwich>(r);
    CHECK(s.defect_length == 3);  // m * C(m-2, n-2) = 3 * C(1,1)
    CHECK(s.lower_point_power == 3);
    CHECK(s.upper_point_power == 2);
    CHECK(s.lower_curve_power == -1);
    CHECK(s.upper_curve_power == -2);

    const auto r2 = ordinary_hodge_ideal({4, 6, 1});
    REQUIRE(std::holds_alternative<OrdinarySandwich>(r2));
    CHECK(std::get<OrdinarySandwich>(r2).defect_length == 6 * 6);  // 6 * C(4, 2)

    // Outside every proved range: no closed form.
    CHECK(std::holds_alternative<NoClosedForm>(ordinary_hodge_ideal({3, 2, 2})));
}

TEST_CASE("triviality threshold") {
    CHECK(triviality_threshold(6, 2) == 2);
    CHECK(triviality_threshold(2, 2) == 0);
    CHECK(triviality_threshold(3, 4) == -1);
    CHECK(triviality_threshold(9, 3) == 2);
}

TEST_CASE("threshold agrees with the exact formula in the mk < n range") {
    for (int n = 2; n <= 8; ++n) {
        for (long m = 2; m <= n; ++m) {
            const long threshold = triviality_threshold(n, m);
            for (long k = 0; m * k < n; ++k) {
                const auto r = ordinary_hodge_ideal({n, m, k});
                REQUIRE(std::holds_alternative<MonomialIdeal>(r));
                CHECK(std::get<MonomialIdeal>(r).is_unit() == (k <= threshold));
            }
        }
    }
}

TEST_CASE("diagonal triviality bound") {
    CHECK(diagonal_triviality_bound({{2, 2, 2, 2}}) == Rational(1));
    CHECK(diagonal_triviality_bound({{2, 3}}) == Rational(-1, 6));
    CHECK(diagonal_triviality_bound({{2, 2}}) == Rational(0));
    CHECK(diagonal_triviality_bound({{3, 3, 3}}) == Rational(0));
    CHECK_THROWS(diagonal_triviality_bound({{1, 2}}));
}

TEST_CASE("symbolic power bound") {
    CHECK(symbolic_power_bound(2, 3, 2, 1) == 2);  // min(2, 4)
    CHECK(symbolic_power_bound(4, 2, 4, 2) == 1);  // min(1, 2)
    CHECK(symbolic_power_bound(3, 1, 1, 5) == 0);  // smooth
    CHECK(symbolic_power_bound(6, 2, 6, 3) == 1);  // min(1, 8-6)
    CHECK(symbolic_power_bound(5, 2, 5, 1) == 0);  // min(1, -1) clamps
}

TEST_CASE("theorem bound is consistent with the exact ordinary formula") {
    // In the proved range mk < n with a point center (r = n), the exact
    // exponent (k+1)m - n is at least the guaranteed symbolic power, so the
    // exact ideal honors the containment theorem.
    for (int n = 2; n <= 8; ++n)
        for (long m = 2; m <= n; ++m)
            for (long k = 0; m * k < n; ++k) {
                const long exact = std::max(0L, (k + 1) * m - n);
                const long guaranteed = symbolic_power_bound(n, m, n, k);
                CHECK(exact >= guaranteed);
                // And the guarantee clamps exactly when the exact ideal is trivial... not
                // quite: the guarantee may be weaker. Only the inequality is claimed.
            }
}

TEST_CASE("closed form matches the surface pipeline on ordinary points") {
    const std::vector<std::string> XY{"x", "y"};
    const RationalPoint O = RationalPoint::origin(2);
    const std::vector<std::pair<long, std::string>> arrangements{
        {2, "x*y"}, {3, "x*y*(x+y)"}, {4, "x*y*(x+y)*(x-y)"}};
    for (const auto& [m, eq] : arrangements) {
        const PlaneCurve c = PlaneCurve::from_polynomial(parse_polynomial(eq, XY));
        const HodgeIdealFamily family = hodge_ideals(c, O, 0);
        const auto closed = ordinary_hodge_ideal({2, m, 0});
        REQUIRE(std::holds_alternative<MonomialIdeal>(closed));
        const long e = std::max(0L, m - 2);
        CHECK(family.ideal(0).equals(JetIdeal::maximal_power(O, e)));
        CHECK(std::get<MonomialIdeal>(closed).is_unit() == family.ideal(0).is_unit());
        if (!family.ideal(0).is_unit())
            CHECK(family.ideal(0).colength() == std::get<MonomialIdeal>(closed).colength());
    }
}

TEST_CASE("monomial ideal colength") {
    CHECK(MonomialIdeal::maximal_power(2, 3).colength() == 6);
    CHECK(MonomialIdeal::maximal_power(4, 2).colength() == 5);
    CHECK(MonomialIdeal::unit(3).colength() == 0);
    const MonomialIdeal mixed = MonomialIdeal::from_generators(2, {M({2, 0}), M({1, 1}), M({0, 3})});
    CHECK(mixed.colength() == 4);
    CHECK_THROWS(MonomialIdeal::from_generators(2, {M({1, 1})}).colength());
}
