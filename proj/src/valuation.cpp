#include "hodge/valuation.hpp"

#include <map>
#include <stdexcept>

namespace hodge {

ThresholdProfile multiplier_profile(const ResolutionTree& tree) {
    ThresholdProfile p;
    for (const auto& d : tree.divisors())
        p.thresholds.push_back(std::max(0L, d.ord_curve - d.discrepancy - 1));
    return p;
}

ThresholdProfile adjoint_profile(const ResolutionTree& tree) {
    ThresholdProfile p;
    for (const auto& d : tree.divisors())
        p.thresholds.push_back(std::max(0L, d.ord_curve - d.discrepancy));
    return p;
}

JetIdeal valuation_ideal(const ResolutionTree& tree, const ThresholdProfile& profile) {
    const auto& divisors = tree.divisors();
    if (profile.thresholds.size() != divisors.size())
        throw std::invalid_argument("valuation_ideal: profile length mismatch");
    for (long c : profile.thresholds)
        if (c < 0) throw std::invalid_argument("valuation_ideal: negative threshold");

    const RationalPoint& center = tree.center();
    bool trivial = true;
    long bound = 1;
    for (size_t i = 0; i < divisors.size(); ++i) {
        const long c = profile.thresholds[i];
        if (c <= 0) continue;
        trivial = false;
        const long rho = divisors[i].ord_center;
        bound = std::max(bound, (c + rho - 1) / rho);
    }
    if (trivial) return JetIdeal::unit(center);

    const int M = static_cast<int>(bound) + 1;
    const std::vector<Monomial> basis = monomial_basis(2, M);
    const Index cols = static_cast<Index>(basis.size());

    // One linear constraint per (divisor, low-order chart monomial):
    // that coefficient of the pulled-back jet must vanish.
    struct RowKey {
        int divisor;
        Monomial mono;
        bool operator<(const RowKey& o) const {
            if (divisor != o.divisor) return divisor < o.divisor;
            if (GradedLexLess()(mono, o.mono)) return true;
            if (GradedLexLess()(o.mono, mono)) return false;
            return false;
        }
    };
    std::map<RowKey, Index> row_index;
    std::vector<std::map<Index, Rational>> rows_sparse;

    for (size_t i = 0; i < divisors.size(); ++i) {
        const long c = profile.thresholds[i];
        if (c <= 0) continue;
        const auto& div = divisors[i];
        for (Index j = 0; j < cols; ++j) {
            const Polynomial mono_poly = Polynomial::from_monomial(basis[static_cast<size_t>(j)], Rational(1));
            const Polynomial pb = pullback(mono_poly, div.chart);
            for (const auto& [m, coef] : pb.terms()) {
                if (m.exp[static_cast<size_t>(div.axis)] >= c) continue;
                const RowKey key{static_cast<int>(i), m};
                auto it = row_index.find(key);
                if (it == row_index.end()) {
                    it = row_index.emplace(key, static_cast<Index>(rows_sparse.size())).first;
                    rows_sparse.emplace_back();
                }
                rows_sparse[static_cast<size_t>(it->second)][j] += coef;
            }
        }
    }

    Mat constraints(static_cast<Index>(rows_sparse.size()), cols);
    constraints.setConstant(Rational(0));
    for (size_t r = 0; r < rows_sparse.size(); ++r)
        for (const auto& [j, coef] : rows_sparse[r]) constraints(static_cast<Index>(r), j) = coef;

    Mat kernel = nullspace(constraints);
    return JetIdeal::from_jet_span(center, M, std::move(kernel));
}

JetIdeal multiplier_ideal(const ResolutionTree& tree) {
    return valuation_ideal(tree, multiplier_profile(tree));
}

JetIdeal adjoint_ideal(const ResolutionTree& tree) {
    return valuation_ideal(tree, adjoint_profile(tree));
}

}  // namespace hodge
