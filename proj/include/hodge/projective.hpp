#pragma once

// Global Hodge-ideal data for reduced hypersurfaces in projective space and
// the instance-level checks of the triviality, degree, and
// independent-conditions bounds. For plane curves the local ideals are
// computed by the surface pipeline in affine charts; in higher dimension the
// singular points are declared ordinary and the exact closed form applies
// as long as mk < n.

#include "hodge/closed_forms.hpp"
#include "hodge/hodge_surface.hpp"
#include "hodge/jet_ideal.hpp"
#include "hodge/polynomial.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace hodge {

struct DeclaredPoint {
    RationalPoint homogeneous;  // n+1 coordinates, not all zero
    long multiplicity = 2;
};

struct ProjectiveHypersurface {
    enum class Mode { Computed, Declared };

    Polynomial equation;  // n+1 variables, homogeneous of degree d, squarefree
    int n = 2;
    long degree = 0;
    Mode mode = Mode::Computed;
    std::vector<DeclaredPoint> declared;

    // Validates homogeneity, squarefreeness (exactly for n = 2, by line
    // probe certification otherwise) and, in declared mode, that each point
    // lies on the hypersurface with the declared multiplicity and a
    // squarefree tangent cone.
    static ProjectiveHypersurface make(Polynomial equation, Mode mode,
                                       std::vector<DeclaredPoint> declared = {});
};

// Scales so the first nonzero coordinate is 1.
RationalPoint normalize_projective(const RationalPoint& p);

struct ZkPoint {
    RationalPoint homogeneous;   // normalized representative
    int chart = 0;               // coordinate set to 1
    RationalPoint affine;        // n coordinates in that chart
    long multiplicity = 0;       // multiplicity of the hypersurface there
    JetIdeal local_ideal;        // local I_k at the point (in chart coordinates)
};

struct SubschemeZk {
    int k = 0;
    std::vector<ZkPoint> points;  // every singular point, including trivial locals

    bool empty() const {
        for (const auto& p : points)
            if (!p.local_ideal.is_unit()) return false;
        return true;
    }
    long dimension() const { return empty() ? -1 : 0; }
    long degree() const {
        long d = 0;
        for (const auto& p : points) d += p.local_ideal.colength();
        return d;
    }
};

SubschemeZk assemble_Zk(const ProjectiveHypersurface& h, int k);

struct CheckEntry {
    std::string name;
    bool pass = false;
    bool vacuous = false;
    std::string detail;
};

// If dim Z_k < n - (k+1)d + 1 then Z_k is empty.
CheckEntry check_triviality_bound(const ProjectiveHypersurface& h, const SubschemeZk& zk);

// deg Z_k <= C((k+1)d - 1, n - z_k) when the dimension hypothesis holds.
CheckEntry check_degree_bound(const ProjectiveHypersurface& h, const SubschemeZk& zk);

// The evaluation map from forms of degree (k+1)d - n - 1 onto the direct sum
// of the local quotients is surjective.
CheckEntry check_independent_conditions(const ProjectiveHypersurface& h, const SubschemeZk& zk);

// Jet separation along the declared points of multiplicity >= 3: with
// m their minimal multiplicity and
//   k = ceil((n-m+j)/m)      for j <= m-1,
//   k = ceil((n-m+j)/(m-2))  for j >= m,
// forms of degree (k+1)d - n - 1 separate (j-1)-jets along those points.
CheckEntry check_jet_separation(const ProjectiveHypersurface& h, long j);

// Rank data exposed for reporting: (rank of the evaluation map, target dim).
std::pair<long, long> evaluation_rank(const ProjectiveHypersurface& h, const SubschemeZk& zk,
                                      long form_degree, std::optional<long> jet_level = std::nullopt);

}  // namespace hodge
