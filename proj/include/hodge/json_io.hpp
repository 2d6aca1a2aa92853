#pragma once

// Deterministic JSON rendering of the library objects and parsing of the
// projective input file. Rationals are rendered as exact "num/den" strings;
// counts and exponents as JSON integers.

#include "hodge/hodge_surface.hpp"
#include "hodge/jet_ideal.hpp"
#include "hodge/projective.hpp"
#include "hodge/resolution.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hodge {

using Json = nlohmann::ordered_json;

Json json_of(const Rational& r);
Json json_of(const RationalPoint& p);
Json json_of(const JetIdeal& ideal, const std::vector<std::string>& vars);
Json json_of(const ResolutionTree& tree);
Json json_of(const VerificationReport& report);
Json json_of(const SubschemeZk& zk, const std::vector<std::string>& vars);
Json json_of(const CheckEntry& entry);

struct ProjectiveInput {
    ProjectiveHypersurface hypersurface;
    std::vector<std::string> vars;
};

// { "equation": str, "vars": [str...], "mode": "computed"|"declared",
//   "points": [ { "coords": ["1","0",...], "multiplicity": int } ] }
ProjectiveInput parse_projective_input(const Json& j);

}  // namespace hodge
