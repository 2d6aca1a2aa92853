#include "hodge/univariate.hpp"

#include "hodge/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodge::univ {

Dense trim(Dense p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const Dense& p) { return p.empty(); }

Dense from_polynomial(const Polynomial& p) {
    if (p.arity() != 1) throw std::invalid_argument("from_polynomial: arity must be 1");
    Dense d(static_cast<size_t>(p.degree() + 1), Rational(0));
    for (const auto& [m, c] : p.terms()) d[static_cast<size_t>(m.exp[0])] = c;
    return trim(std::move(d));
}

Polynomial to_polynomial(const Dense& p, int arity, int var) {
    Polynomial out(arity);
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        Monomial m = Monomial::unit(arity);
        m.exp[static_cast<size_t>(var)] = static_cast<int>(i);
        out.add_term(m, p[i]);
    }
    return out;
}

Dense add(const Dense& a, const Dense& b) {
    Dense r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

Dense sub(const Dense& a, const Dense& b) {
    Dense r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}

Dense mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

Dense scale(const Rational& c, const Dense& p) {
    if (c.is_zero()) return {};
    Dense r = p;
    for (auto& x : r) x *= c;
    return r;
}

Dense derivative(const Dense& p) {
    if (p.size() <= 1) return {};
    Dense r(p.size() - 1, Rational(0));
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * p[i];
    return trim(std::move(r));
}

Rational evaluate(const Dense& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<Dense, Dense> divmod(const Dense& a, const Dense& b) {
    if (b.empty()) throw std::domain_error("univariate division by zero");
    Dense rem = trim(a);
    if (rem.size() < b.size()) return {{}, rem};
    Dense quot(rem.size() - b.size() + 1, Rational(0));
    const Rational lead_inv = Rational(1) / b.back();
    const long db = static_cast<long>(b.size()) - 1;
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
        const size_t ui = static_cast<size_t>(i);
        if (rem[ui].is_zero()) continue;
        const size_t shift = static_cast<size_t>(i - db);
        const Rational q = rem[ui] * lead_inv;
        quot[shift] = q;
        for (size_t j = 0; j < b.size(); ++j) rem[shift + j] -= q * b[j];
    }
    return {trim(std::move(quot)), trim(std::move(rem))};
}

Dense divide_exact(const Dense& a, const Dense& b) {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) throw std::logic_error("divide_exact: division was not exact");
    return q;
}

Dense gcd(Dense a, Dense b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return scale(Rational(1) / a.back(), a);
}

Dense squarefree_part(const Dense& p) {
    if (degree(p) <= 0) return p;
    const Dense g = gcd(p, derivative(p));
    if (degree(g) <= 0) return p;
    return divide_exact(p, g);
}

namespace {

// Divisors of |n| by trial division; throws past the effort cap so callers
// never silently miss roots.
std::vector<mpz_class> divisors(mpz_class n, unsigned long cap_steps = 4'000'000) {
    n = abs(n);
    if (n == 0) throw std::invalid_argument("divisors of zero");
    std::vector<std::pair<mpz_class, int>> factors;
    mpz_class d = 2;
    unsigned long steps = 0;
    while (d * d <= n) {
        if (++steps > cap_steps)
            throw std::runtime_error("rational root search: coefficient too large to factor");
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        const size_t base = divs.size();
        mpz_class pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
        if (divs.size() > 200'000) throw std::runtime_error("rational root search: too many divisors");
    }
    return divs;
}

}  // namespace

std::map<Rational, int> rational_roots(const Dense& p) {
    if (is_zero(p)) throw std::invalid_argument("rational_roots of the zero polynomial");
    std::map<Rational, int> roots;
    Dense work = p;

    // Factor out powers of t.
    size_t tpow = 0;
    while (tpow < work.size() && work[tpow].is_zero()) ++tpow;
    if (tpow > 0) {
        roots[Rational(0)] = static_cast<int>(tpow);
        work.erase(work.begin(), work.begin() + static_cast<long>(tpow));
    }
    if (degree(work) <= 0) return roots;

    // Clear denominators to get integer coefficients.
    mpz_class lcm_den = 1;
    for (const auto& c : work) {
        mpz_class den = c.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        lcm_den = lcm_den / g * den;
    }
    std::vector<mpz_class> coeffs;
    for (const auto& c : work) coeffs.push_back(c.numerator() * (lcm_den / c.denominator()));

    const mpz_class a0 = coeffs.front();
    const mpz_class an = coeffs.back();
    const std::vector<mpz_class> ps = divisors(a0);
    const std::vector<mpz_class> qs = divisors(an);

    std::vector<Rational> candidates;
    for (const auto& pd : ps) {
        for (const auto& qd : qs) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), pd.get_mpz_t(), qd.get_mpz_t());
            if (g != 1) continue;
            candidates.emplace_back(pd, qd);
            candidates.emplace_back(-pd, qd);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& cand : candidates) {
        if (!evaluate(work, cand).is_zero()) continue;
        int mult = 0;
        const Dense lin{-cand, Rational(1)};
        while (true) {
            auto [q, r] = divmod(work, lin);
            if (!r.empty()) break;
            work = std::move(q);
            ++mult;
            if (degree(work) <= 0) break;
        }
        roots[cand] = mult;
        if (degree(work) <= 0) break;
    }
    return roots;
}

std::map<Rational, int> rational_roots(const Polynomial& p) {
    return rational_roots(from_polynomial(p));
}

Dense strip_rational_roots(Dense p, std::map<Rational, int>* roots_out) {
    if (is_zero(p)) return p;
    auto roots = rational_roots(p);
    for (const auto& [root, mult] : roots) {
        const Dense lin{-root, Rational(1)};
        for (int i = 0; i < mult; ++i) p = divide_exact(p, lin);
    }
    if (roots_out) *roots_out = std::move(roots);
    return p;
}

Rational resultant(const Dense& a, const Dense& b) {
    const int da = degree(a), db = degree(b);
    if (da < 0 || db < 0) return Rational(0);
    if (da == 0 && db == 0) return Rational(1);
    if (da == 0) return a[0].pow(db);
    if (db == 0) return b[0].pow(da);
    // Sylvester matrix, exact determinant.
    const Index n = da + db;
    Mat s(n, n);
    s.setConstant(Rational(0));
    for (int row = 0; row < db; ++row)
        for (int j = 0; j <= da; ++j) s(row, row + j) = a[static_cast<size_t>(da - j)];
    for (int row = 0; row < da; ++row)
        for (int j = 0; j <= db; ++j) s(db + row, row + j) = b[static_cast<size_t>(db - j)];
    return determinant(std::move(s));
}

std::vector<Dense> coefficients_in(const Polynomial& p, int var) {
    if (p.arity() != 2) throw std::invalid_argument("coefficients_in: arity must be 2");
    const int other = 1 - var;
    std::vector<Dense> out(static_cast<size_t>(std::max(0, p.degree_in(var)) + 1));
    for (const auto& [m, c] : p.terms()) {
        const size_t dv = static_cast<size_t>(m.exp[static_cast<size_t>(var)]);
        const size_t doth = static_cast<size_t>(m.exp[static_cast<size_t>(other)]);
        Dense& coeff = out[dv];
        if (coeff.size() <= doth) coeff.resize(doth + 1, Rational(0));
        coeff[doth] += c;
    }
    for (auto& coeff : out) coeff = trim(std::move(coeff));
    return out;
}

Dense specialize(const Polynomial& p, int var, const Rational& value) {
    if (p.arity() != 2) throw std::invalid_argument("specialize: arity must be 2");
    const int other = 1 - var;
    Dense out;
    for (const auto& [m, c] : p.terms()) {
        const size_t dv = static_cast<size_t>(m.exp[static_cast<size_t>(var)]);
        const int doth = m.exp[static_cast<size_t>(other)];
        if (out.size() <= dv) out.resize(dv + 1, Rational(0));
        out[dv] += c * value.pow(doth);
    }
    return trim(std::move(out));
}

Dense resultant_bivariate(const Polynomial& p, const Polynomial& q, int elim_var) {
    if (p.arity() != 2 || q.arity() != 2) throw std::invalid_argument("resultant_bivariate: arity must be 2");
    if (p.is_zero() || q.is_zero()) return {};
    const int keep = 1 - elim_var;
    const int dp = p.degree_in(elim_var);
    const int dq = q.degree_in(elim_var);
    if (dp == 0 && dq == 0) return Dense{Rational(1)};

    const auto pc = coefficients_in(p, elim_var);
    const auto qc = coefficients_in(q, elim_var);
    const Dense& lead_p = pc.back();
    const Dense& lead_q = qc.back();

    // Degree bound for the resultant in the kept variable.
    const int bound = dp * std::max(0, q.degree_in(keep)) + dq * std::max(0, p.degree_in(keep));
    const int samples = bound + 1;

    std::vector<Rational> nodes;
    std::vector<Rational> values;
    long t = 0;
    while (static_cast<int>(nodes.size()) < samples) {
        const Rational x(t);
        t = (t > 0) ? -t : -t + 1;  // 0, 1, -1, 2, -2, ...
        // Skip nodes where a leading coefficient drops; the specialized
        // resultant would not match the generic one there.
        if (evaluate(lead_p, x).is_zero() || evaluate(lead_q, x).is_zero()) continue;
        Dense ps = specialize(p, elim_var, x);
        Dense qs = specialize(q, elim_var, x);
        nodes.push_back(x);
        values.push_back(resultant(ps, qs));
    }

    // Newton interpolation, exact.
    std::vector<Rational> coeffs = values;
    for (int level = 1; level < samples; ++level)
        for (int i = samples - 1; i >= level; --i)
            coeffs[static_cast<size_t>(i)] =
                (coeffs[static_cast<size_t>(i)] - coeffs[static_cast<size_t>(i - 1)]) /
                (nodes[static_cast<size_t>(i)] - nodes[static_cast<size_t>(i - level)]);
    Dense result{coeffs.back()};
    for (int i = samples - 2; i >= 0; --i) {
        // result = result * (x - nodes[i]) + coeffs[i]
        Dense shifted(result.size() + 1, Rational(0));
        for (size_t j = 0; j < result.size(); ++j) {
            shifted[j + 1] += result[j];
            shifted[j] -= nodes[static_cast<size_t>(i)] * result[j];
        }
        shifted[0] += coeffs[static_cast<size_t>(i)];
        result = trim(std::move(shifted));
    }
    return result;
}

}  // namespace hodge::univ
