#pragma once
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qse/coefficient.hpp"

namespace qse {

// Exponents of one tensor copy in canonical order x^x t^t dx^dx dt^dt Sx^sx Et^ts.
// Sx = exp(z dx) shifts x by z; Et = exp(z dt) shifts t by z. The surface
// generator St = exp(2z dt) is Et^2, so ts counts half-steps of St and both
// shift exponents may be negative.
struct CopyExponents {
    unsigned x = 0, t = 0, dx = 0, dt = 0;
    int sx = 0, ts = 0;
    friend auto operator<=>(const CopyExponents&, const CopyExponents&) = default;
    bool identity() const { return x == 0 && t == 0 && dx == 0 && dt == 0 && sx == 0 && ts == 0; }
    unsigned degree() const {
        return x + t + dx + dt + static_cast<unsigned>(sx < 0 ? -sx : sx)
             + static_cast<unsigned>(ts < 0 ? -ts : ts);
    }
};

struct OpMonomial {
    std::vector<CopyExponents> copies;
    explicit OpMonomial(int n = 1) : copies(static_cast<std::size_t>(n)) {}
    friend auto operator<=>(const OpMonomial&, const OpMonomial&) = default;
    bool identity() const;
    unsigned degree() const;
};

// Finite Coefficient-combination of normal-ordered monomials on n tensor copies.
// All products are normalized immediately; equality is map equality.
class OpElement {
public:
    explicit OpElement(int copies = 1);

    static OpElement zero(int copies = 1) { return OpElement(copies); }
    static OpElement identity(int copies = 1);
    static OpElement scalar(const Coefficient& c, int copies = 1);
    static OpElement from_term(const OpMonomial& mono, const Coefficient& c);

    // single-copy atoms placed on copy `which` (1-based) of `copies`
    static OpElement x(int copies = 1, int which = 1);
    static OpElement t(int copies = 1, int which = 1);
    static OpElement dx(int copies = 1, int which = 1);
    static OpElement dt(int copies = 1, int which = 1);
    static OpElement sx(int power, int copies = 1, int which = 1);
    static OpElement tshift(int power, int copies = 1, int which = 1);  // Et^power
    static OpElement st(int power, int copies = 1, int which = 1) { return tshift(2 * power, copies, which); }

    int copies() const { return copies_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<OpMonomial, Coefficient>& terms() const { return terms_; }
    unsigned degree() const;  // max monomial degree, 0 for zero element

    OpElement operator-() const;
    OpElement& operator+=(const OpElement& o);
    OpElement& operator-=(const OpElement& o);
    friend OpElement operator+(OpElement x, const OpElement& y) { return x += y; }
    friend OpElement operator-(OpElement x, const OpElement& y) { return x -= y; }
    friend OpElement operator*(const OpElement& x, const OpElement& y);
    OpElement& operator*=(const OpElement& o) { *this = *this * o; return *this; }

    OpElement& scale(const Coefficient& c);
    friend OpElement operator*(const Coefficient& c, OpElement e) { return e.scale(c); }
    friend OpElement operator*(OpElement e, const Coefficient& c) { return e.scale(c); }
    OpElement pow(unsigned e) const;

    OpElement eval(const ParamBindings& b) const;  // binds parameters in coefficients only

    friend bool operator==(const OpElement&, const OpElement&) = default;

    std::string str() const;

private:
    int copies_ = 1;
    std::map<OpMonomial, Coefficient> terms_;
    void add_term(const OpMonomial& mono, const Coefficient& c);
};

OpElement commutator(const OpElement& x, const OpElement& y);

// maps copy i of e onto copy targets[i] (1-based) of a fresh target_copies element
OpElement embed(const OpElement& e, const std::vector<int>& targets, int target_copies);

std::string render_op_monomial(const OpMonomial& mono, bool with_copy_tags);

} // namespace qse
