#pragma once

// Ideals cut out by divisorial valuation thresholds on a resolution tree:
// { g : ord_{E_i}(g) >= c_i for all i }. The multiplier ideal uses the
// thresholds c_i = v_i - k_i - 1 and the adjoint ideal c_i = v_i - k_i,
// both clamped at zero. Realized as exact linear algebra on truncated jets:
// monomials of degree >= max_i ceil(c_i / rho_i) meet every threshold
// automatically, so a finite jet suffices.

#include "hodge/jet_ideal.hpp"
#include "hodge/resolution.hpp"

#include <vector>

namespace hodge {

struct ThresholdProfile {
    std::vector<long> thresholds;  // one per divisor, >= 0
};

ThresholdProfile multiplier_profile(const ResolutionTree& tree);
ThresholdProfile adjoint_profile(const ResolutionTree& tree);

JetIdeal valuation_ideal(const ResolutionTree& tree, const ThresholdProfile& profile);

// I_0(D) locally at the tree's center.
JetIdeal multiplier_ideal(const ResolutionTree& tree);

// adj(D) locally at the tree's center.
JetIdeal adjoint_ideal(const ResolutionTree& tree);

}  // namespace hodge
