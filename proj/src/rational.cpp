#include "qse/rational.hpp"

#include <cctype>

namespace qse {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw DivisionByZero("0 raised to a negative power");
    mpz_class num, den;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), ae);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), ae);
    mpq_class r = e > 0 ? mpq_class(num, den) : mpq_class(den, num);
    r.canonicalize();
    return Rational(r);
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

Rational Rational::from_string(const std::string& s) {
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t num_end = digits(i);
    if (num_end == i) throw SyntaxError("expected digits in rational literal", i);
    std::size_t j = num_end;
    if (j < s.size() && s[j] == '/') {
        std::size_t den_end = digits(j + 1);
        if (den_end == j + 1) throw SyntaxError("expected denominator digits", j + 1);
        j = den_end;
    }
    if (j != s.size()) throw SyntaxError("trailing characters in rational literal", j);
    mpq_class v(s[0] == '+' ? s.substr(1) : s, 10);
    if (v.get_den() == 0) throw DivisionByZero();
    v.canonicalize();
    return Rational(v);
}

} // namespace qse
