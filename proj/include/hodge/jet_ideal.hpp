#pragma once

// Local m-primary ideals at a rational point, represented by their image in
// the ring of truncated jets together with a certified primary bound M0
// (m^M0 is contained in the ideal, established by the Nakayama criterion:
// once every degree-t monomial lies in the jet image at truncation t+1,
// m^t lies in the ideal). With that certificate every membership and
// containment question is a finite exact linear algebra question.

#include "hodge/linalg.hpp"
#include "hodge/polynomial.hpp"
#include "hodge/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hodge {

struct RationalPoint {
    std::vector<Rational> coords;

    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}
    static RationalPoint origin(int arity) {
        return RationalPoint(std::vector<Rational>(static_cast<size_t>(arity), Rational(0)));
    }

    int arity() const { return static_cast<int>(coords.size()); }
    bool is_origin() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
    friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords == b.coords; }
    friend bool operator!=(const RationalPoint& a, const RationalPoint& b) { return !(a == b); }
    friend bool operator<(const RationalPoint& a, const RationalPoint& b) { return a.coords < b.coords; }
    std::string str() const;
};

struct GeneratorSet {
    std::vector<Polynomial> generators;
    RationalPoint center;
};

struct NotPrimaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CenterMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Vanishing order of p at the point (degree of the lowest term after
// translating the point to the origin).
int order_at_center(const Polynomial& p, const RationalPoint& center);

class JetIdeal {
public:
    // Default state is an arity-0 unit ideal; meaningful values come from
    // the named constructors below.
    JetIdeal() = default;

    // Least certified M0, truncation M = max(M0 + 1, min_truncation).
    static JetIdeal from_generators(const GeneratorSet& gens, int min_truncation = 0, int cap = 64);

    // Builds from an already-echelonized jet span (rows = image of the ideal
    // in O/m^truncation, in centered coordinates). The span must be closed
    // under multiplication by coordinates; M0 is detected, and detection must
    // succeed below the truncation.
    static JetIdeal from_jet_span(const RationalPoint& center, int truncation, Mat span_rref);

    static JetIdeal unit(const RationalPoint& center);
    static JetIdeal maximal_power(const RationalPoint& center, long q, int cap = 64);

    int arity() const { return center_.arity(); }
    const RationalPoint& center() const { return center_; }
    int truncation() const { return trunc_; }
    int primary_bound() const { return bound_; }
    const Mat& jet_basis() const { return basis_; }

    bool is_unit() const { return bound_ == 0; }
    long colength() const { return colength_; }
    // Largest t with the ideal contained in m^t.
    int order() const;

    bool member(const Polynomial& p) const;
    // True iff the other ideal is contained in this one.
    bool contains(const JetIdeal& other) const;
    bool equals(const JetIdeal& other) const;

    // Same ideal represented at a larger truncation.
    JetIdeal retruncated(int truncation) const;

    // Deterministic minimal generating set (Nakayama), in ambient
    // coordinates, ordered by degree then graded lex, normalized to
    // primitive integer coefficients with positive leading coefficient.
    const std::vector<Polynomial>& generators() const { return generators_; }
    std::vector<std::string> generator_strings(const std::vector<std::string>& vars) const;
    std::vector<std::string> generator_strings() const;

    // Invariant check used by tests: the span is an ideal of the jet ring.
    bool closed_under_multiplication() const;

    friend bool operator==(const JetIdeal& a, const JetIdeal& b) { return a.equals(b); }

private:
    void finalize();  // detects M0, colength, minimal generators

    RationalPoint center_;
    int trunc_ = 1;
    int bound_ = 0;
    long colength_ = 0;
    Mat basis_;  // canonical RREF over the jet monomial basis (degree < trunc_)
    std::vector<Polynomial> generators_;
};

JetIdeal sum(const JetIdeal& a, const JetIdeal& b);
JetIdeal product(const JetIdeal& a, const JetIdeal& b);
JetIdeal power(const JetIdeal& a, long e);

}  // namespace hodge
