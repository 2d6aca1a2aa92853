#pragma once

// The surface pipeline: J_k(D) is generated by the twisted derivatives
// h^(k+1) d^beta (g/h) of generators g of the multiplier ideal I_0, for
// |beta| <= k, and on a smooth surface I_k(D) = J_k(D). The verification
// harness replays the containment and nontriviality theorems on the
// computed family; a failure indicates an implementation bug, never an
// acceptable state.

#include "hodge/jet_ideal.hpp"
#include "hodge/resolution.hpp"
#include "hodge/valuation.hpp"

#include <string>
#include <vector>

namespace hodge {

// Twisted-derivative generators of J_k at the center of i0. Requires a
// squarefree h; i0 must generate the multiplier ideal locally there.
GeneratorSet jk_generators(const Polynomial& h, const GeneratorSet& i0, int k);

struct HodgeIdealFamily {
    PlaneCurve curve;
    RationalPoint center;
    int kmax = 0;
    bool smooth_center = false;
    std::vector<JetIdeal> ideals;  // I_0 ... I_kmax

    const JetIdeal& ideal(int k) const { return ideals.at(static_cast<size_t>(k)); }
};

// Computes I_0 from the resolution and each higher ideal as J_k. Only valid
// on surfaces, hence the fixed arity-2 input. Chain invariants are checked
// before returning.
HodgeIdealFamily hodge_ideals(const PlaneCurve& curve, const RationalPoint& center, int kmax,
                              int cap = 64);
HodgeIdealFamily hodge_ideals(const PlaneCurve& curve, const ResolutionTree& tree, int kmax,
                              int cap = 64);

struct VerificationCheck {
    std::string name;
    int k = -1;  // -1 for family-level checks
    bool pass = false;
    bool vacuous = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass ? 0 : 1;
        return n;
    }
};

VerificationReport verify_theorems(const HodgeIdealFamily& family, const ResolutionTree& tree);

// All rational singular points of the curve, certified complete: if the
// singular locus contains a non-rational point, or completeness cannot be
// certified over Q, throws GroundFieldError.
std::vector<RationalPoint> singular_points(const PlaneCurve& curve);

}  // namespace hodge
