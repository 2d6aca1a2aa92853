#include "hodge/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodge {

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

MonomialIdeal MonomialIdeal::unit(int arity) {
    return MonomialIdeal{arity, {Monomial::unit(arity)}};
}

MonomialIdeal MonomialIdeal::maximal_power(int arity, long q) {
    if (q <= 0) return unit(arity);
    return MonomialIdeal{arity, monomials_of_degree(arity, static_cast<int>(q))};
}

MonomialIdeal MonomialIdeal::from_generators(int arity, std::vector<Monomial> gens) {
    std::vector<Monomial> minimal;
    std::sort(gens.begin(), gens.end(), GradedLexLess());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }
    return MonomialIdeal{arity, std::move(minimal)};
}

bool MonomialIdeal::is_unit() const {
    for (const auto& g : generators)
        if (g.is_unit()) return true;
    return false;
}

bool MonomialIdeal::member(const Monomial& m) const {
    for (const auto& g : generators)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::is_antichain() const {
    for (size_t i = 0; i < generators.size(); ++i)
        for (size_t j = 0; j < generators.size(); ++j)
            if (i != j && generators[i].divides(generators[j])) return false;
    return true;
}

long MonomialIdeal::colength() const {
    if (generators.empty()) throw std::domain_error("colength of the zero monomial ideal");
    // m-primary iff some generator is a pure power of each variable.
    int bound = 0;
    for (int var = 0; var < arity; ++var) {
        int best = -1;
        for (const auto& g : generators) {
            bool pure = true;
            for (int i = 0; i < arity; ++i)
                if (i != var && g.exp[static_cast<size_t>(i)] != 0) pure = false;
            if (pure) {
                const int e = g.exp[static_cast<size_t>(var)];
                best = best < 0 ? e : std::min(best, e);
            }
        }
        if (best < 0) throw std::domain_error("colength: monomial ideal is not primary");
        bound += best;
    }
    long count = 0;
    for (const auto& m : monomial_basis(arity, bound + 1))
        if (!member(m)) ++count;
    return count;
}

std::vector<std::string> MonomialIdeal::generator_strings(const std::vector<std::string>& vars) const {
    std::vector<std::string> out;
    for (const auto& g : generators)
        out.push_back(Polynomial::from_monomial(g, Rational(1)).render(vars));
    return out;
}

std::vector<std::string> MonomialIdeal::generator_strings() const {
    return generator_strings(default_var_names(arity));
}

namespace {

void enumerate_bounded(int slots, long cap, long total, std::vector<int>& cur, size_t idx,
                       std::vector<std::vector<int>>& out) {
    if (idx + 1 == cur.size()) {
        if (total <= cap) {
            cur[idx] = static_cast<int>(total);
            out.push_back(cur);
        }
        return;
    }
    const long hi = std::min(cap, total);
    for (long e = 0; e <= hi; ++e) {
        cur[idx] = static_cast<int>(e);
        enumerate_bounded(slots, cap, total - e, cur, idx + 1, out);
    }
}

}  // namespace

MonomialIdeal snc_hodge_ideal(int n, int r, long k) {
    if (n < 1 || r < 1 || r > n) throw std::invalid_argument("snc_hodge_ideal: need 1 <= r <= n");
    if (k < 0) throw std::invalid_argument("snc_hodge_ideal: negative level");
    if (r == 1 || k == 0) return MonomialIdeal::unit(n);

    std::vector<Monomial> gens;
    std::vector<int> cur(static_cast<size_t>(r), 0);
    std::vector<std::vector<int>> tuples;
    enumerate_bounded(r, k, k * (r - 1), cur, 0, tuples);
    for (const auto& t : tuples) {
        Monomial m = Monomial::unit(n);
        for (int i = 0; i < r; ++i) m.exp[static_cast<size_t>(i)] = t[static_cast<size_t>(i)];
        gens.push_back(std::move(m));
    }
    std::sort(gens.begin(), gens.end(), GradedLexLess());
    return MonomialIdeal{n, std::move(gens)};
}

OrdinaryResult ordinary_hodge_ideal(const OrdinaryQuery& q) {
    if (q.n < 2 || q.m < 2 || q.k < 0) throw std::invalid_argument("ordinary_hodge_ideal: out of range");
    if (q.m * q.k < q.n) {
        const long e = (q.k + 1) * q.m - q.n;
        return MonomialIdeal::maximal_power(q.n, std::max(0L, e));
    }
    if (q.k == 1 && q.m >= q.n) {
        OrdinarySandwich s;
        s.lower_curve_power = q.m - q.n - 1;
        s.lower_point_power = 2 * q.m - q.n;
        s.upper_curve_power = q.m - q.n - 2;
        s.upper_point_power = 2 * q.m - q.n - 1;
        s.defect_length = mpz_class(q.m) * binomial(q.m - 2, q.n - 2);
        return s;
    }
    return NoClosedForm{};
}

long triviality_threshold(int n, long m) {
    if (n < 2 || m < 2) throw std::invalid_argument("triviality_threshold: out of range");
    return n / m - 1;
}

Rational diagonal_triviality_bound(const DiagonalQuery& q) {
    if (q.exponents.empty()) throw std::invalid_argument("diagonal_triviality_bound: no exponents");
    Rational alpha(0);
    for (long a : q.exponents) {
        if (a < 2) throw std::invalid_argument("diagonal_triviality_bound: exponents must be >= 2");
        alpha += Rational(1, a);
    }
    return alpha - Rational(1);
}

long symbolic_power_bound(int n, long m, int r, long k) {
    if (m < 1 || r < 1 || r > n) throw std::invalid_argument("symbolic_power_bound: out of range");
    return std::max(0L, std::min(m - 1, (k + 1) * m - r));
}

}  // namespace hodge
