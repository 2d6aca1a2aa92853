#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/polynomial.hpp"

#include <random>

using namespace hodge;

namespace {

const std::vector<std::string> XY{"x", "y"};

Polynomial P(const std::string& s) { return parse_polynomial(s, XY); }

Polynomial random_poly(std::mt19937& rng, int maxdeg = 3) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, maxdeg);
    Polynomial p(2);
    for (int t = 0; t < 5; ++t) {
        Monomial m = Monomial::unit(2);
        m.exp[0] = deg(rng);
        m.exp[1] = deg(rng);
        p.add_term(m, Rational(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("parsing the running curve examples") {
    const Polynomial cusp = P("x^2 + y^3");
    CHECK(cusp.term_count() == 2);
    CHECK(cusp.coeff(Monomial(std::vector<int>{2, 0})) == Rational(1));
    CHECK(cusp.coeff(Monomial(std::vector<int>{0, 3})) == Rational(1));

    CHECK(P("0").is_zero());
    CHECK(P("x*y*(x+y)") == P("x^2*y + x*y^2"));
    CHECK(P("-x") == -P("x"));
    CHECK(P("2^3") == Polynomial::constant(2, Rational(8)));
    CHECK(P("1/2*x") == Rational(1, 2) * P("x"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(P("x + z"), ParseError);
    CHECK_THROWS_AS(P("x +"), ParseError);
    CHECK_THROWS_AS(P("(x"), ParseError);
    CHECK_THROWS_AS(P("x^-2"), ParseError);
    CHECK_THROWS_AS(P("x y"), ParseError);  // no implicit multiplication
}

TEST_CASE("render round trip on canonical forms") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Polynomial p = random_poly(rng);
        CHECK(parse_polynomial(p.render(XY), XY) == p);
    }
    CHECK(P("y^4 - 3*x^2*y").render(XY) == "y^4 - 3*x^2*y");
    CHECK(Polynomial::zero(2).render(XY) == "0");
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        const Polynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) * r == p * r + q * r);
        if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("partial derivatives") {
    CHECK(partial_derivative(P("x^2 + y^3"), 0) == P("2*x"));
    CHECK(partial_derivative(P("x^2 + y^3"), 1) == P("3*y^2"));
    CHECK(partial_derivative(P("7"), 0).is_zero());
}

TEST_CASE("composition implements blow-up substitutions") {
    const Polynomial x = P("x"), y = P("y");
    CHECK(P("x^2 + y^3").compose({x, x * y}) == P("x^2 + x^3*y^3"));
    CHECK(P("x*y").compose({x, x * y}) == P("x^2*y"));
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        const Polynomial p = random_poly(rng);
        CHECK(p.compose({x, y}) == p);
    }
}

TEST_CASE("compose is a ring homomorphism") {
    std::mt19937 rng(5);
    const std::vector<Polynomial> subst{P("x + y^2"), P("x*y - 1")};
    for (int i = 0; i < 25; ++i) {
        const Polynomial p = random_poly(rng), q = random_poly(rng);
        CHECK((p * q).compose(subst) == p.compose(subst) * q.compose(subst));
        CHECK((p + q).compose(subst) == p.compose(subst) + q.compose(subst));
    }
}

TEST_CASE("translate and truncate") {
    const Polynomial p = P("x^2 + y^3");
    CHECK(p.translate({Rational(1), Rational(0)}) == P("x^2 + 2*x + 1 + y^3"));
    CHECK(p.truncate(3) == P("x^2"));
    CHECK(p.truncate(1).is_zero());
}

TEST_CASE("exact division") {
    const Polynomial p = P("x^2 - y^2");
    const auto q = p.divide_exact(P("x - y"));
    REQUIRE(q.has_value());
    CHECK(*q == P("x + y"));
    CHECK_FALSE(P("x^2 + y^2").divide_exact(P("x - y")).has_value());
}

TEST_CASE("twisted derivative: hand-computed quotient-rule values") {
    const Polynomial g = P("x"), h = P("x^2 + y^3");
    // d_y(x/h) = -3*x*y^2 / h^2, so h^2 d_y(x/h) = -3*x*y^2.
    CHECK(twisted_derivative(g, h, Monomial(std::vector<int>{0, 1}), 1) == P("-3*x*y^2"));
    // h^2 d_x(x/h) = h - 2*x^2 = y^3 - x^2.
    CHECK(twisted_derivative(g, h, Monomial(std::vector<int>{1, 0}), 1) == P("y^3 - x^2"));
    // Zeroth derivative at k = 0 returns g itself.
    CHECK(twisted_derivative(g, h, Monomial(std::vector<int>{0, 0}), 0) == g);
    CHECK_THROWS(twisted_derivative(g, h, Monomial(std::vector<int>{1, 1}), 1));
    CHECK_THROWS(twisted_derivative(g, Polynomial::zero(2), Monomial(std::vector<int>{0, 0}), 0));
}

TEST_CASE("twisted derivative satisfies the Leibniz expansion") {
    // h^(k+1) d^beta(a*g/h) = sum C(beta, gamma) d^gamma(a) * h^(k+1) d^(beta-gamma)(g/h)
    std::mt19937 rng(13);
    auto choose = [](int n, int k) {
        long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return Rational(r);
    };
    for (int trial = 0; trial < 10; ++trial) {
        const Polynomial a = random_poly(rng, 2);
        const Polynomial g = random_poly(rng, 2);
        Polynomial h = random_poly(rng, 2);
        if (h.is_zero()) h = P("x^2 + y^3");
        const int k = 2;
        for (int b0 = 0; b0 <= 2; ++b0) {
            for (int b1 = 0; b0 + b1 <= 2; ++b1) {
                const Monomial beta(std::vector<int>{b0, b1});
                const Polynomial lhs = twisted_derivative(a * g, h, beta, k);
                Polynomial rhs(2);
                for (int c0 = 0; c0 <= b0; ++c0) {
                    for (int c1 = 0; c1 <= b1; ++c1) {
                        Polynomial da = a;
                        for (int i = 0; i < c0; ++i) da = partial_derivative(da, 0);
                        for (int i = 0; i < c1; ++i) da = partial_derivative(da, 1);
                        const Monomial rest(std::vector<int>{b0 - c0, b1 - c1});
                        rhs = rhs + choose(b0, c0) * choose(b1, c1) *
                                        (da * twisted_derivative(g, h, rest, k));
                    }
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("monomial bases") {
    CHECK(jet_dimension(2, 3) == 6);
    CHECK(jet_dimension(4, 2) == 5);
    CHECK(monomial_basis(2, 3).size() == 6);
    CHECK(monomials_of_degree(2, 2).size() == 3);
    CHECK(monomials_of_degree(3, 2).size() == 6);
}

TEST_CASE("lowest form and homogeneity") {
    CHECK(P("x^2 + y^3").lowest_form() == P("x^2"));
    CHECK(P("x^2 + x*y").is_homogeneous());
    CHECK_FALSE(P("x^2 + y^3").is_homogeneous());
}
