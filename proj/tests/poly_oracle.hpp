#pragma once
// Test-side oracle: polynomials in (x, t) with Coefficient values, acted on by
// single-copy elements through plain calculus (shift = substitution). Written
// independently of the normal-ordering kernel so the two can cross-check.
#include <map>
#include <utility>

#include "qse/op_element.hpp"

namespace qse::testing {

struct Poly {
    // (x exponent, t exponent) -> coefficient
    std::map<std::pair<unsigned, unsigned>, Coefficient> terms;

    static Poly one() { return xt(0, 0); }
    static Poly xt(unsigned i, unsigned j, const Coefficient& c = Coefficient(1)) {
        Poly p;
        if (!c.is_zero()) p.terms[{i, j}] = c;
        return p;
    }

    void add(unsigned i, unsigned j, const Coefficient& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(i, j);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [k, c] : b.terms) r.add(k.first, k.second, c);
        return r;
    }

    friend bool operator==(const Poly&, const Poly&) = default;
};

// substitutes x -> x + s*z (axis 0) or t -> t + s*z (axis 1)
inline Poly shift_poly(const Poly& p, int axis, int s) {
    if (s == 0) return p;
    Poly out;
    for (const auto& [k, c] : p.terms) {
        unsigned e = axis == 0 ? k.first : k.second;
        // (v + s z)^e expanded one power at a time
        std::vector<Coefficient> row{Coefficient(1)};
        Coefficient sz = Coefficient::monomial(Rational(s), {1, 0, 0});
        for (unsigned i = 0; i < e; ++i) {
            std::vector<Coefficient> next(row.size() + 1);
            for (std::size_t j = 0; j < row.size(); ++j) {
                next[j + 1] += row[j];
                next[j] += row[j] * sz;
            }
            row = std::move(next);
        }
        for (std::size_t j = 0; j < row.size(); ++j) {
            unsigned i2 = axis == 0 ? static_cast<unsigned>(j) : k.first;
            unsigned j2 = axis == 0 ? k.second : static_cast<unsigned>(j);
            out.add(i2, j2, c * row[j]);
        }
    }
    return out;
}

inline Poly diff_poly(const Poly& p, int axis) {
    Poly out;
    for (const auto& [k, c] : p.terms) {
        unsigned e = axis == 0 ? k.first : k.second;
        if (e == 0) continue;
        unsigned i2 = axis == 0 ? k.first - 1 : k.first;
        unsigned j2 = axis == 0 ? k.second : k.second - 1;
        out.add(i2, j2, c * Coefficient(static_cast<long>(e)));
    }
    return out;
}

inline Poly apply_oracle(const OpElement& op, const Poly& p) {
    if (op.copies() != 1) throw IndexOutOfRange("oracle is single-copy");
    Poly out;
    for (const auto& [mono, coeff] : op.terms()) {
        const auto& e = mono.copies[0];
        Poly q = shift_poly(shift_poly(p, 0, e.sx), 1, e.ts);
        for (unsigned i = 0; i < e.dx; ++i) q = diff_poly(q, 0);
        for (unsigned i = 0; i < e.dt; ++i) q = diff_poly(q, 1);
        for (const auto& [k, c] : q.terms)
            out.add(k.first + e.x, k.second + e.t, c * coeff);
    }
    return out;
}

} // namespace qse::testing
