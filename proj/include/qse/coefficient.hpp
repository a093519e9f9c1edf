#pragma once
#include <compare>
#include <map>
#include <optional>
#include <string>

#include "qse/rational.hpp"

namespace qse {

// z^ze * m^me * a^ae; ze may be negative (Laurent), me/ae may not
struct ParamMonomial {
    int ze = 0;
    unsigned me = 0;
    unsigned ae = 0;
    friend auto operator<=>(const ParamMonomial&, const ParamMonomial&) = default;
    bool trivial() const { return ze == 0 && me == 0 && ae == 0; }
};

struct ParamBindings {
    std::optional<Rational> z, m, a;
};

// Element of Q[z, z^-1, m, a]. Stored sparse, zero terms never kept.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(long n) { if (n != 0) terms_[{}] = Rational(n); }  // NOLINT
    Coefficient(const Rational& r) { if (!r.is_zero()) terms_[{}] = r; }  // NOLINT

    static Coefficient z(int e = 1) { return monomial(1, {e, 0, 0}); }
    static Coefficient m(unsigned e = 1) { return monomial(1, {0, e, 0}); }
    static Coefficient a(unsigned e = 1) { return monomial(1, {0, 0, e}); }
    static Coefficient monomial(const Rational& r, const ParamMonomial& pm);

    bool is_zero() const { return terms_.empty(); }
    // true when the value is a plain rational (no parameters)
    bool is_constant() const;
    Rational as_rational() const;  // requires is_constant()

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    friend Coefficient operator+(Coefficient x, const Coefficient& y) { return x += y; }
    friend Coefficient operator-(Coefficient x, const Coefficient& y) { return x -= y; }
    friend Coefficient operator*(const Coefficient& x, const Coefficient& y);
    Coefficient pow(unsigned e) const;

    // substitutes bound parameters, keeps unbound ones symbolic;
    // DivisionByZero if z is bound to 0 while a negative z-power is present
    Coefficient eval(const ParamBindings& b) const;

    friend bool operator==(const Coefficient&, const Coefficient&) = default;

    const std::map<ParamMonomial, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    std::string str() const;

private:
    std::map<ParamMonomial, Rational> terms_;
    void add_term(const ParamMonomial& pm, const Rational& r);
};

// one rendered summand, sign split out so callers can join with " + " / " - "
struct RenderedTerm {
    bool negative = false;
    std::string body;
};
// terms of c in map order; empty when c == 0
std::vector<RenderedTerm> render_terms(const Coefficient& c);
std::string render_monomial_body(const ParamMonomial& pm, const Rational& magnitude);

} // namespace qse
