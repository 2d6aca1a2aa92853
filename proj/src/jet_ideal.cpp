#include "hodge/jet_ideal.hpp"

#include <algorithm>
#include <sstream>

namespace hodge {

std::string RationalPoint::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ", ";
        os << coords[i].str();
    }
    os << ")";
    return os.str();
}

int order_at_center(const Polynomial& p, const RationalPoint& center) {
    if (p.is_zero()) throw std::domain_error("order_at_center: zero polynomial");
    if (p.arity() != center.arity()) throw std::invalid_argument("order_at_center: arity mismatch");
    std::vector<Rational> shift = center.coords;
    return p.translate(shift).order();
}

namespace {

// Index lookup for the jet monomial basis of degree < bound.
struct JetFrame {
    int arity;
    int bound;
    std::vector<Monomial> monomials;
    std::map<Monomial, Index, GradedLexLess> index;

    JetFrame(int arity_, int bound_) : arity(arity_), bound(bound_) {
        monomials = monomial_basis(arity, bound);
        for (size_t i = 0; i < monomials.size(); ++i)
            index.emplace(monomials[i], static_cast<Index>(i));
    }

    Index dim() const { return static_cast<Index>(monomials.size()); }

    RowVec jet(const Polynomial& p) const {
        RowVec v(dim());
        v.setConstant(Rational(0));
        for (const auto& [m, c] : p.terms()) {
            if (m.degree() >= bound) break;
            v(index.at(m)) += c;
        }
        return v;
    }

    Polynomial lift(const RowVec& v) const {
        Polynomial p(arity);
        for (Index j = 0; j < dim(); ++j)
            if (!v(j).is_zero()) p.add_term(monomials[static_cast<size_t>(j)], v(j));
        return p;
    }
};

// Span of the image of the ideal generated by centered polynomials in
// O/m^bound: all monomial multiples of the generators, truncated.
RowSpan ideal_jet_span(const std::vector<Polynomial>& centered, const JetFrame& frame) {
    RowSpan span(frame.dim());
    for (const auto& g : centered) {
        if (g.is_zero()) continue;
        const int ord = g.order();
        const int room = frame.bound - ord;  // multiples of degree >= room truncate to zero
        if (room <= 0) continue;
        for (const auto& mono : monomial_basis(frame.arity, room)) {
            const Polynomial mult = Polynomial::from_monomial(mono, Rational(1)) * g;
            span.insert(frame.jet(mult.truncate(frame.bound)));
        }
    }
    return span;
}

// Does the projection of the span to O/m^(t+1) contain every monomial of
// degree exactly t?
bool covers_degree(const Mat& basis, const JetFrame& frame, int t) {
    const Index sub = static_cast<Index>(jet_dimension(frame.arity, t + 1));
    Mat proj = basis.leftCols(sub);
    RowSpan span(sub);
    for (Index i = 0; i < proj.rows(); ++i) span.insert(proj.row(i));
    const Index lo = static_cast<Index>(jet_dimension(frame.arity, t));
    for (Index j = lo; j < sub; ++j) {
        RowVec unit(sub);
        unit.setConstant(Rational(0));
        unit(j) = Rational(1);
        if (!span.contains(unit)) return false;
    }
    return true;
}

int detect_primary_bound(const Mat& basis, const JetFrame& frame) {
    for (int t = 0; t < frame.bound; ++t)
        if (covers_degree(basis, frame, t)) return t;
    return -1;
}

}  // namespace

void JetIdeal::finalize() {
    const JetFrame frame(arity(), trunc_);

    // Colength: dimension of O/m^M0 minus the projected span dimension.
    const Index sub = static_cast<Index>(jet_dimension(arity(), bound_));
    Mat proj = basis_.leftCols(sub);
    colength_ = static_cast<long>(sub) - static_cast<long>(rank(std::move(proj)));

    // Minimal generators by Nakayama: walk candidates in (degree, graded
    // lex) order and keep those outside m*a plus the ones already kept.
    RowSpan working(frame.dim());
    std::vector<Polynomial> lifts;
    for (Index i = 0; i < basis_.rows(); ++i) lifts.push_back(frame.lift(basis_.row(i)));
    for (const auto& lift : lifts) {
        for (int var = 0; var < arity(); ++var) {
            const Polynomial shifted = Polynomial::variable(arity(), var) * lift;
            working.insert(frame.jet(shifted.truncate(trunc_)));
        }
    }
    std::vector<Polynomial> candidates = lifts;
    std::sort(candidates.begin(), candidates.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        GradedLexLess less;
        auto ita = a.terms().rbegin();
        auto itb = b.terms().rbegin();
        for (; ita != a.terms().rend() && itb != b.terms().rend(); ++ita, ++itb) {
            if (less(ita->first, itb->first)) return false;
            if (less(itb->first, ita->first)) return true;
        }
        return a.term_count() < b.term_count();
    });

    generators_.clear();
    for (const auto& cand : candidates) {
        if (cand.is_zero()) continue;
        if (!working.insert(frame.jet(cand))) continue;  // already in m*a + kept
        // Normalize to primitive integer coefficients, positive lead.
        mpz_class lcm_den = 1, gcd_num = 0;
        for (const auto& [m, c] : cand.terms()) {
            mpz_class den = c.denominator(), g;
            mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
            lcm_den = lcm_den / g * den;
        }
        Polynomial scaled = Rational(lcm_den) * cand;
        for (const auto& [m, c] : scaled.terms()) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), c.numerator().get_mpz_t());
            gcd_num = g;
        }
        if (gcd_num != 0) scaled = Rational(mpz_class(1), gcd_num) * scaled;
        if (scaled.leading_term().second.sign() < 0) scaled = -scaled;
        // Back to ambient coordinates around the center.
        std::vector<Rational> back;
        for (const auto& c : center_.coords) back.push_back(-c);
        generators_.push_back(scaled.translate(back));
    }
}

JetIdeal JetIdeal::from_generators(const GeneratorSet& gens, int min_truncation, int cap) {
    if (gens.generators.empty()) throw std::invalid_argument("from_generators: no generators");
    const int n = gens.center.arity();
    std::vector<Polynomial> centered;
    int maxdeg = 0;
    for (const auto& g : gens.generators) {
        if (g.arity() != n) throw std::invalid_argument("from_generators: generator arity mismatch");
        if (g.is_zero()) continue;
        Polynomial c = g.translate(gens.center.coords);
        maxdeg = std::max(maxdeg, c.degree());
        centered.push_back(std::move(c));
    }
    if (centered.empty()) throw std::invalid_argument("from_generators: all generators are zero");

    int guess = std::max({2, maxdeg + 2, min_truncation});
    while (true) {
        const JetFrame frame(n, guess);
        RowSpan span = ideal_jet_span(centered, frame);
        Mat basis = span.to_matrix();
        const int t = detect_primary_bound(basis, frame);
        if (t >= 0) {
            JetIdeal ideal;
            ideal.center_ = gens.center;
            ideal.bound_ = t;
            const int want = std::max(t + 1, min_truncation);
            if (want == guess) {
                ideal.trunc_ = guess;
                ideal.basis_ = std::move(basis);
            } else {
                const JetFrame exact(n, want);
                ideal.trunc_ = want;
                ideal.basis_ = ideal_jet_span(centered, exact).to_matrix();
            }
            ideal.finalize();
            return ideal;
        }
        if (guess > cap)
            throw NotPrimaryError(
                "ideal is not certified maximal-primary at the center within truncation cap " +
                std::to_string(cap));
        guess = std::min(2 * guess, cap + 1);
    }
}

JetIdeal JetIdeal::from_jet_span(const RationalPoint& center, int truncation, Mat span_rref) {
    JetIdeal ideal;
    ideal.center_ = center;
    ideal.trunc_ = truncation;
    ideal.basis_ = std::move(span_rref);
    const JetFrame frame(center.arity(), truncation);
    if (ideal.basis_.cols() != frame.dim())
        throw std::invalid_argument("from_jet_span: basis width does not match truncation");
    const int t = detect_primary_bound(ideal.basis_, frame);
    if (t < 0) throw NotPrimaryError("from_jet_span: no primary bound below the truncation");
    ideal.bound_ = t;
    ideal.finalize();
    return ideal;
}

JetIdeal JetIdeal::unit(const RationalPoint& center) {
    GeneratorSet g{{Polynomial::constant(center.arity(), Rational(1))}, center};
    return from_generators(g);
}

JetIdeal JetIdeal::maximal_power(const RationalPoint& center, long q, int cap) {
    if (q <= 0) return unit(center);
    std::vector<Polynomial> gens;
    const int n = center.arity();
    for (const auto& mono : monomials_of_degree(n, static_cast<int>(q))) {
        Polynomial p = Polynomial::from_monomial(mono, Rational(1));
        std::vector<Rational> back;
        for (const auto& c : center.coords) back.push_back(-c);
        gens.push_back(p.translate(back));
    }
    return from_generators(GeneratorSet{std::move(gens), center}, 0, std::max(cap, static_cast<int>(q) + 1));
}

int JetIdeal::order() const {
    if (is_unit()) return 0;
    int best = trunc_;
    const std::vector<Monomial> monos = monomial_basis(arity(), trunc_);
    for (Index i = 0; i < basis_.rows(); ++i) {
        for (Index j = 0; j < basis_.cols(); ++j) {
            if (!basis_(i, j).is_zero()) {
                best = std::min(best, monos[static_cast<size_t>(j)].degree());
                break;
            }
        }
    }
    return best;
}

bool JetIdeal::member(const Polynomial& p) const {
    if (p.arity() != arity()) throw std::invalid_argument("member: arity mismatch");
    if (p.is_zero()) return true;
    const JetFrame frame(arity(), trunc_);
    RowSpan span(frame.dim());
    for (Index i = 0; i < basis_.rows(); ++i) span.insert(basis_.row(i));
    const Polynomial centered = p.translate(center_.coords).truncate(trunc_);
    return span.contains(frame.jet(centered));
}

bool JetIdeal::contains(const JetIdeal& other) const {
    if (center_ != other.center_) throw CenterMismatchError("contains: centers differ");
    const int common = std::max(trunc_, other.trunc_);
    const JetIdeal a = retruncated(common);
    const JetIdeal b = other.retruncated(common);
    RowSpan span(a.basis_.cols());
    for (Index i = 0; i < a.basis_.rows(); ++i) span.insert(a.basis_.row(i));
    for (Index i = 0; i < b.basis_.rows(); ++i)
        if (!span.contains(b.basis_.row(i))) return false;
    return true;
}

bool JetIdeal::equals(const JetIdeal& other) const {
    if (center_ != other.center_) return false;
    const int common = std::max(trunc_, other.trunc_);
    const JetIdeal a = retruncated(common);
    const JetIdeal b = other.retruncated(common);
    if (a.basis_.rows() != b.basis_.rows() || a.basis_.cols() != b.basis_.cols()) return false;
    for (Index i = 0; i < a.basis_.rows(); ++i)
        for (Index j = 0; j < a.basis_.cols(); ++j)
            if (a.basis_(i, j) != b.basis_(i, j)) return false;
    return true;
}

JetIdeal JetIdeal::retruncated(int truncation) const {
    if (truncation < trunc_) throw std::invalid_argument("retruncated: cannot shrink the truncation");
    if (truncation == trunc_) return *this;
    // The minimal generators generate the ideal, so the enlarged jet image
    // can be rebuilt from them directly; M0 and colength are unchanged.
    JetIdeal ideal;
    ideal.center_ = center_;
    ideal.trunc_ = truncation;
    ideal.bound_ = bound_;
    ideal.colength_ = colength_;
    ideal.generators_ = generators_;
    const JetFrame frame(arity(), truncation);
    std::vector<Polynomial> centered;
    for (const auto& g : generators_) centered.push_back(g.translate(center_.coords));
    ideal.basis_ = ideal_jet_span(centered, frame).to_matrix();
    return ideal;
}

std::vector<std::string> JetIdeal::generator_strings(const std::vector<std::string>& vars) const {
    std::vector<std::string> out;
    for (const auto& g : generators_) out.push_back(g.render(vars));
    return out;
}

std::vector<std::string> JetIdeal::generator_strings() const {
    return generator_strings(default_var_names(arity()));
}

bool JetIdeal::closed_under_multiplication() const {
    const JetFrame frame(arity(), trunc_);
    RowSpan span(frame.dim());
    for (Index i = 0; i < basis_.rows(); ++i) span.insert(basis_.row(i));
    for (Index i = 0; i < basis_.rows(); ++i) {
        const Polynomial lift = frame.lift(basis_.row(i));
        for (int var = 0; var < arity(); ++var) {
            const Polynomial shifted = Polynomial::variable(arity(), var) * lift;
            if (!span.contains(frame.jet(shifted.truncate(trunc_)))) return false;
        }
    }
    return true;
}

JetIdeal sum(const JetIdeal& a, const JetIdeal& b) {
    if (a.center() != b.center()) throw CenterMismatchError("sum: centers differ");
    std::vector<Polynomial> gens = a.generators();
    const auto& bg = b.generators();
    gens.insert(gens.end(), bg.begin(), bg.end());
    return JetIdeal::from_generators(GeneratorSet{std::move(gens), a.center()});
}

JetIdeal product(const JetIdeal& a, const JetIdeal& b) {
    if (a.center() != b.center()) throw CenterMismatchError("product: centers differ");
    std::vector<Polynomial> gens;
    for (const auto& ga : a.generators())
        for (const auto& gb : b.generators()) gens.push_back(ga * gb);
    const int cap = std::max(64, a.primary_bound() + b.primary_bound() + 2);
    return JetIdeal::from_generators(GeneratorSet{std::move(gens), a.center()}, 0, cap);
}

JetIdeal power(const JetIdeal& a, long e) {
    if (e < 0) throw std::invalid_argument("power: negative exponent");
    if (e == 0) return JetIdeal::unit(a.center());
    JetIdeal acc = a;
    for (long i = 1; i < e; ++i) acc = product(acc, a);
    return acc;
}

}  // namespace hodge
