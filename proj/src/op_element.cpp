#include "qse/op_element.hpp"

#include <algorithm>

namespace qse {

bool OpMonomial::identity() const {
    return std::all_of(copies.begin(), copies.end(), [](const CopyExponents& c) { return c.identity(); });
}

unsigned OpMonomial::degree() const {
    unsigned d = 0;
    for (const auto& c : copies) d += c.degree();
    return d;
}

OpElement::OpElement(int copies) : copies_(copies) {
    if (copies < 1) throw IndexOutOfRange("copy count must be >= 1");
}

void OpElement::add_term(const OpMonomial& mono, const Coefficient& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

OpElement OpElement::identity(int copies) {
    return scalar(Coefficient(1), copies);
}

OpElement OpElement::scalar(const Coefficient& c, int copies) {
    OpElement e(copies);
    e.add_term(OpMonomial(copies), c);
    return e;
}

OpElement OpElement::from_term(const OpMonomial& mono, const Coefficient& c) {
    OpElement e(static_cast<int>(mono.copies.size()));
    e.add_term(mono, c);
    return e;
}

namespace {
CopyExponents& pick(OpMonomial& m, int copies, int which) {
    if (which < 1 || which > copies)
        throw IndexOutOfRange("copy index " + std::to_string(which) + " out of 1.." + std::to_string(copies));
    return m.copies[static_cast<std::size_t>(which - 1)];
}
} // namespace

OpElement OpElement::x(int copies, int which) {
    OpMonomial m(copies);
    pick(m, copies, which).x = 1;
    return from_term(m, Coefficient(1));
}
OpElement OpElement::t(int copies, int which) {
    OpMonomial m(copies);
    pick(m, copies, which).t = 1;
    return from_term(m, Coefficient(1));
}
OpElement OpElement::dx(int copies, int which) {
    OpMonomial m(copies);
    pick(m, copies, which).dx = 1;
    return from_term(m, Coefficient(1));
}
OpElement OpElement::dt(int copies, int which) {
    OpMonomial m(copies);
    pick(m, copies, which).dt = 1;
    return from_term(m, Coefficient(1));
}
OpElement OpElement::sx(int power, int copies, int which) {
    OpMonomial m(copies);
    pick(m, copies, which).sx = power;
    return from_term(m, Coefficient(1));
}
OpElement OpElement::tshift(int power, int copies, int which) {
    OpMonomial m(copies);
    pick(m, copies, which).ts = power;
    return from_term(m, Coefficient(1));
}

unsigned OpElement::degree() const {
    unsigned d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
}

OpElement OpElement::operator-() const {
    OpElement r(copies_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

OpElement& OpElement::operator+=(const OpElement& o) {
    if (copies_ != o.copies_) throw IndexOutOfRange("copy count mismatch in +");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

OpElement& OpElement::operator-=(const OpElement& o) {
    if (copies_ != o.copies_) throw IndexOutOfRange("copy count mismatch in -");
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

OpElement& OpElement::scale(const Coefficient& c) {
    std::map<OpMonomial, Coefficient> out;
    if (!c.is_zero())
        for (const auto& [mono, v] : terms_) out.emplace(mono, v * c);
    terms_ = std::move(out);
    return *this;
}

namespace {

// One sector of one copy: coordinate power, derivative power, shift power.
// The shift S is exp(z d), so S^s y = (y + s z) S^s.
struct SectorTerm {
    unsigned coord, der;
    int shift;
    Coefficient c;
};

// normal form of (y^ac d^ad S^as) * (y^bc d^bd S^bs)
std::vector<SectorTerm> sector_mul(unsigned ac, unsigned ad, int as, unsigned bc, unsigned bd, int bs) {
    // cross S^as over y^bc: S^as y^bc = (y + as z)^bc S^as
    // poly[j] = coefficient of y^j in (y + as z)^bc
    std::vector<Coefficient> poly{Coefficient(1)};
    for (unsigned i = 0; i < bc; ++i) {
        std::vector<Coefficient> next(poly.size() + 1);
        Coefficient shift_c = Coefficient::monomial(Rational(as), {1, 0, 0});  // as * z
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            if (as != 0) next[j] += poly[j] * shift_c;
        }
        poly = std::move(next);
    }
    // cross d^ad over the polynomial: repeatedly apply d (y^e d^f) = y^e d^(f+1) + e y^(e-1) d^f
    std::map<std::pair<unsigned, unsigned>, Coefficient> state;  // (y exp, d exp) -> coeff
    for (std::size_t j = 0; j < poly.size(); ++j)
        if (!poly[j].is_zero()) state[{static_cast<unsigned>(j), 0u}] = poly[j];
    for (unsigned step = 0; step < ad; ++step) {
        std::map<std::pair<unsigned, unsigned>, Coefficient> next;
        for (const auto& [yd, c] : state) {
            auto [ye, de] = yd;
            next[{ye, de + 1}] += c;
            if (ye > 0) next[{ye - 1, de}] += c * Coefficient(static_cast<long>(ye));
        }
        state = std::move(next);
    }
    std::vector<SectorTerm> out;
    out.reserve(state.size());
    for (const auto& [yd, c] : state)
        if (!c.is_zero()) out.push_back({ac + yd.first, yd.second + bd, as + bs, c});
    return out;
}

} // namespace

OpElement operator*(const OpElement& x, const OpElement& y) {
    if (x.copies() != y.copies()) throw IndexOutOfRange("copy count mismatch in *");
    const int n = x.copies();
    OpElement result(n);
    for (const auto& [ma, ca] : x.terms()) {
        for (const auto& [mb, cb] : y.terms()) {
            // per copy: normal-order the x sector and the t sector independently
            std::vector<std::pair<OpMonomial, Coefficient>> acc{{OpMonomial(n), ca * cb}};
            for (int k = 0; k < n; ++k) {
                const auto& A = ma.copies[static_cast<std::size_t>(k)];
                const auto& B = mb.copies[static_cast<std::size_t>(k)];
                auto xs = sector_mul(A.x, A.dx, A.sx, B.x, B.dx, B.sx);
                auto ts = sector_mul(A.t, A.dt, A.ts, B.t, B.dt, B.ts);
                std::vector<std::pair<OpMonomial, Coefficient>> next;
                next.reserve(acc.size() * xs.size() * ts.size());
                for (const auto& [mono, c] : acc) {
                    for (const auto& xt : xs) {
                        for (const auto& tt : ts) {
                            Coefficient cc = c * xt.c * tt.c;
                            if (cc.is_zero()) continue;
                            OpMonomial m2 = mono;
                            auto& e = m2.copies[static_cast<std::size_t>(k)];
                            e.x = xt.coord; e.dx = xt.der; e.sx = xt.shift;
                            e.t = tt.coord; e.dt = tt.der; e.ts = tt.shift;
                            next.emplace_back(std::move(m2), std::move(cc));
                        }
                    }
                }
                acc = std::move(next);
            }
            for (auto& [mono, c] : acc) result.add_term(mono, c);
        }
    }
    return result;
}

OpElement OpElement::pow(unsigned e) const {
    OpElement r = identity(copies_);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

OpElement OpElement::eval(const ParamBindings& b) const {
    OpElement r(copies_);
    for (const auto& [mono, c] : terms_) r.add_term(mono, c.eval(b));
    return r;
}

OpElement commutator(const OpElement& x, const OpElement& y) {
    return x * y - y * x;
}

OpElement embed(const OpElement& e, const std::vector<int>& targets, int target_copies) {
    if (static_cast<int>(targets.size()) != e.copies())
        throw IndexOutOfRange("embed: one target per source copy required");
    std::vector<bool> used(static_cast<std::size_t>(target_copies) + 1, false);
    for (int t : targets) {
        if (t < 1 || t > target_copies) throw IndexOutOfRange("embed: target copy out of range");
        if (used[static_cast<std::size_t>(t)]) throw IndexOutOfRange("embed: duplicate target copy");
        used[static_cast<std::size_t>(t)] = true;
    }
    OpElement out(target_copies);
    for (const auto& [mono, c] : e.terms()) {
        OpMonomial m2(target_copies);
        for (std::size_t i = 0; i < targets.size(); ++i)
            m2.copies[static_cast<std::size_t>(targets[i] - 1)] = mono.copies[i];
        out += OpElement::from_term(m2, c);
    }
    return out;
}

namespace {
void append_factor(std::string& out, const std::string& f) {
    if (!out.empty()) out += "*";
    out += f;
}
} // namespace

std::string render_op_monomial(const OpMonomial& mono, bool with_copy_tags) {
    std::string out;
    for (std::size_t k = 0; k < mono.copies.size(); ++k) {
        const auto& e = mono.copies[k];
        std::string tag = with_copy_tags ? "_" + std::to_string(k + 1) : "";
        auto emit = [&](const char* name, int exp) {
            if (exp == 0) return;
            std::string f = name + tag;
            if (exp != 1) f += "^" + std::to_string(exp);
            append_factor(out, f);
        };
        emit("x", static_cast<int>(e.x));
        emit("t", static_cast<int>(e.t));
        emit("dx", static_cast<int>(e.dx));
        emit("dt", static_cast<int>(e.dt));
        emit("Sx", e.sx);
        if (e.ts != 0) {
            if (e.ts % 2 == 0) emit("St", e.ts / 2);
            else emit("Et", e.ts);
        }
    }
    return out;
}

std::string OpElement::str() const {
    if (terms_.empty()) return "0";
    const bool tags = copies_ > 1;
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        std::string mono_str = render_op_monomial(mono, tags);
        // coefficient with several parameter terms gets parenthesized, unless it
        // multiplies the identity monomial, where its terms are inlined directly
        std::vector<RenderedTerm> parts;
        if (coeff.term_count() > 1 && !mono_str.empty()) {
            parts.push_back({false, "(" + coeff.str() + ")*" + mono_str});
        } else {
            for (const auto& [pm, v] : coeff.terms()) {
                RenderedTerm rt;
                rt.negative = v.is_negative();
                Rational mag = rt.negative ? -v : v;
                if (mono_str.empty()) {
                    rt.body = render_monomial_body(pm, mag);
                } else if (mag == Rational(1) && pm.trivial()) {
                    rt.body = mono_str;
                } else {
                    rt.body = render_monomial_body(pm, mag) + "*" + mono_str;
                }
                parts.push_back(std::move(rt));
            }
        }
        for (const auto& p : parts) {
            if (first) {
                if (p.negative) out += "-";
                first = false;
            } else {
                out += p.negative ? " - " : " + ";
            }
            out += p.body;
        }
    }
    return out;
}

} // namespace qse
