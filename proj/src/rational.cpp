#include "hodge/rational.hpp"

#include <ostream>

namespace hodge {

Rational Rational::from_string(const std::string& s) {
    size_t lo = s.find_first_not_of(" \t");
    size_t hi = s.find_last_not_of(" \t");
    if (lo == std::string::npos) throw std::invalid_argument("Rational: empty string");
    std::string t = s.substr(lo, hi - lo + 1);
    const size_t slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(t));
        }
        mpz_class num(t.substr(0, slash));
        mpz_class den(t.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Rational Rational::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("Rational: 0 to negative power");
        return (Rational(1) / *this).pow(-e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hodge
