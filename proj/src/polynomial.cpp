#include "hodge/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hodge {

Polynomial Polynomial::constant(int arity, const Rational& c) {
    Polynomial p(arity);
    p.add_term(Monomial::unit(arity), c);
    return p;
}

Polynomial Polynomial::variable(int arity, int var) {
    if (var < 0 || var >= arity) throw std::invalid_argument("variable index out of range");
    Monomial m = Monomial::unit(arity);
    m.exp[static_cast<size_t>(var)] = 1;
    return from_monomial(m, Rational(1));
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
    Polynomial p(m.arity());
    p.add_term(m, c);
    return p;
}

int Polynomial::order() const {
    if (terms_.empty()) throw std::domain_error("order of the zero polynomial");
    return terms_.begin()->first.degree();
}

int Polynomial::min_exponent(int var) const {
    int m = -1;
    for (const auto& [mono, c] : terms_) {
        const int e = mono.exp[static_cast<size_t>(var)];
        m = (m < 0) ? e : std::min(m, e);
        if (m == 0) break;
    }
    return m < 0 ? 0 : m;
}

int Polynomial::degree_in(int var) const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.exp[static_cast<size_t>(var)]);
    return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Monomial, Rational> Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

Polynomial& Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.arity() != arity_) throw std::invalid_argument("monomial arity mismatch");
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r(a.arity_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.arity_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial r = constant(arity_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_) throw std::invalid_argument("evaluate: arity mismatch");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < arity_; ++i) {
            const int e = m.exp[static_cast<size_t>(i)];
            if (e > 0) t *= point[static_cast<size_t>(i)].pow(e);
        }
        total += t;
    }
    return total;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& subst) const {
    if (static_cast<int>(subst.size()) != arity_) throw std::invalid_argument("compose: arity mismatch");
    int out_arity = subst.empty() ? 0 : subst[0].arity();
    for (const auto& s : subst)
        if (s.arity() != out_arity) throw std::invalid_argument("compose: inconsistent substitution arity");
    if (terms_.empty()) return Polynomial(out_arity);

    // Power tables per variable, filled on demand.
    std::vector<std::vector<Polynomial>> powers(static_cast<size_t>(arity_));
    for (int i = 0; i < arity_; ++i) powers[static_cast<size_t>(i)].push_back(constant(out_arity, Rational(1)));
    auto power = [&](int var, int e) -> const Polynomial& {
        auto& tab = powers[static_cast<size_t>(var)];
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * subst[static_cast<size_t>(var)]);
        return tab[static_cast<size_t>(e)];
    };

    Polynomial result(out_arity);
    for (const auto& [m, c] : terms_) {
        Polynomial t = constant(out_arity, c);
        for (int i = 0; i < arity_; ++i) {
            const int e = m.exp[static_cast<size_t>(i)];
            if (e > 0) t = t * power(i, e);
        }
        result = result + t;
    }
    return result;
}

Polynomial Polynomial::translate(const std::vector<Rational>& shift) const {
    if (static_cast<int>(shift.size()) != arity_) throw std::invalid_argument("translate: arity mismatch");
    bool trivial = true;
    for (const auto& s : shift) trivial = trivial && s.is_zero();
    if (trivial) return *this;
    std::vector<Polynomial> subst;
    subst.reserve(static_cast<size_t>(arity_));
    for (int i = 0; i < arity_; ++i)
        subst.push_back(variable(arity_, i) + constant(arity_, shift[static_cast<size_t>(i)]));
    return compose(subst);
}

Polynomial Polynomial::truncate(int bound) const {
    Polynomial r(arity_);
    for (const auto& [m, c] : terms_) {
        if (m.degree() >= bound) break;  // terms are degree-sorted
        r.terms_.emplace(m, c);
    }
    return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (divisor.arity_ != arity_) throw std::invalid_argument("divide_exact: arity mismatch");
    Polynomial rem = *this;
    Polynomial quot(arity_);
    const auto [dm, dc] = divisor.leading_term();
    while (!rem.is_zero()) {
        const auto [rm, rc] = rem.leading_term();
        if (!dm.divides(rm)) return std::nullopt;
        Monomial q = rm;
        for (size_t i = 0; i < q.exp.size(); ++i) q.exp[i] -= dm.exp[i];
        const Rational qc = rc / dc;
        quot.add_term(q, qc);
        rem = rem - from_monomial(q, qc) * divisor;
    }
    return quot;
}

Polynomial Polynomial::lowest_form() const {
    if (terms_.empty()) return *this;
    const int d = order();
    Polynomial r(arity_);
    for (const auto& [m, c] : terms_) {
        if (m.degree() != d) break;
        r.terms_.emplace(m, c);
    }
    return r;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::vector<std::string> default_var_names(int arity) {
    static const char* base[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (int i = 0; i < arity; ++i)
        names.push_back(i < 4 ? base[i] : "v" + std::to_string(i + 1));
    return names;
}

std::string Polynomial::render(const std::vector<std::string>& vars) const {
    if (static_cast<int>(vars.size()) != arity_) throw std::invalid_argument("render: variable list arity mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending graded lex, matching the usual presentation.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool is_const = m.is_unit();
        if (mag != Rational(1) || is_const) {
            os << mag.str();
            if (!is_const) os << "*";
        }
        bool first_var = true;
        for (int i = 0; i < arity_; ++i) {
            const int e = m.exp[static_cast<size_t>(i)];
            if (e == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << vars[static_cast<size_t>(i)];
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string Polynomial::render() const { return render(default_var_names(arity_)); }

namespace {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& vars;
    size_t pos = 0;

    Parser(const std::string& t, const std::vector<std::string>& v) : text(t), vars(v) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    int arity() const { return static_cast<int>(vars.size()); }

    Polynomial parse_expression() {
        Polynomial acc = parse_term();
        while (true) {
            const char c = peek();
            if (c == '+') {
                ++pos;
                acc = acc + parse_term();
            } else if (c == '-') {
                ++pos;
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        bool neg = false;
        while (true) {
            const char c = peek();
            if (c == '-') {
                neg = !neg;
                ++pos;
            } else if (c == '+') {
                ++pos;
            } else {
                break;
            }
        }
        Polynomial base = parse_atom();
        while (accept('^')) {
            const long e = parse_natural();
            base = base.pow(static_cast<int>(e));
        }
        return neg ? -base : base;
    }

    long parse_natural() {
        skip_ws();
        const size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError(start, "expected a non-negative integer exponent");
        return std::stol(text.substr(start, pos - start));
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos >= text.size()) throw ParseError(pos, "unexpected end of expression");
        const char c = text[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expression();
            if (!accept(')')) throw ParseError(pos, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = parse_integer();
            if (peek() == '/') {
                ++pos;
                skip_ws();
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw ParseError(pos, "expected an integer denominator");
                mpz_class den = parse_integer();
                if (den == 0) throw ParseError(pos, "zero denominator");
                return Polynomial::constant(arity(), Rational(num, den));
            }
            return Polynomial::constant(arity(), Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            const std::string name = text.substr(start, pos - start);
            for (size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) return Polynomial::variable(arity(), static_cast<int>(i));
            throw ParseError(start, "unknown variable '" + name + "'");
        }
        throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }

    mpz_class parse_integer() {
        const size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return mpz_class(text.substr(start, pos - start));
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    Parser parser(text, vars);
    Polynomial p = parser.parse_expression();
    if (!parser.eof()) throw ParseError(parser.pos, "trailing input");
    return p;
}

Polynomial partial_derivative(const Polynomial& p, int var) {
    if (var < 0 || var >= p.arity()) throw std::invalid_argument("partial_derivative: bad variable");
    Polynomial r(p.arity());
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exp[static_cast<size_t>(var)];
        if (e == 0) continue;
        Monomial d = m;
        d.exp[static_cast<size_t>(var)] -= 1;
        r.add_term(d, Rational(e) * c);
    }
    return r;
}

Polynomial twisted_derivative(const Polynomial& g, const Polynomial& h, const Monomial& beta, int k) {
    if (h.is_zero()) throw std::domain_error("twisted_derivative: zero denominator polynomial");
    if (beta.arity() != g.arity() || g.arity() != h.arity())
        throw std::invalid_argument("twisted_derivative: arity mismatch");
    const int order = beta.degree();
    if (order > k) throw std::invalid_argument("twisted_derivative: |beta| exceeds k");

    // Maintain d^gamma(g/h) = num / h^(j+1) with j = |gamma|:
    //   num <- h * d_i(num) - (j+1) * num * d_i(h)
    Polynomial num = g;
    int j = 0;
    for (int var = 0; var < beta.arity(); ++var) {
        for (int step = 0; step < beta.exp[static_cast<size_t>(var)]; ++step) {
            num = h * partial_derivative(num, var) - Rational(j + 1) * (num * partial_derivative(h, var));
            ++j;
        }
    }
    return num * h.pow(k - order);
}

static void enumerate_degree(int arity, int degree, std::vector<int>& cur, size_t idx,
                             std::vector<Monomial>& out) {
    if (idx + 1 == cur.size()) {
        cur[idx] = degree;
        out.emplace_back(cur);
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        cur[idx] = e;
        enumerate_degree(arity, degree - e, cur, idx + 1, out);
    }
}

std::vector<Monomial> monomials_of_degree(int arity, int degree) {
    std::vector<Monomial> out;
    if (arity == 0) {
        if (degree == 0) out.push_back(Monomial::unit(0));
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(arity), 0);
    enumerate_degree(arity, degree, cur, 0, out);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return GradedLexLess()(a, b);
    });
    return out;
}

std::vector<Monomial> monomial_basis(int arity, int bound) {
    std::vector<Monomial> out;
    for (int d = 0; d < bound; ++d) {
        auto layer = monomials_of_degree(arity, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

long jet_dimension(int arity, int bound) {
    // C(bound - 1 + arity, arity)
    if (bound <= 0) return 0;
    long n = 1;
    for (int i = 1; i <= arity; ++i) n = n * (bound - 1 + i) / i;
    return n;
}

}  // namespace hodge
