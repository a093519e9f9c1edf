#include "qse/coefficient.hpp"

#include <vector>

namespace qse {

void Coefficient::add_term(const ParamMonomial& pm, const Rational& r) {
    if (r.is_zero()) return;
    auto it = terms_.find(pm);
    if (it == terms_.end()) {
        terms_.emplace(pm, r);
        return;
    }
    it->second += r;
    if (it->second.is_zero()) terms_.erase(it);
}

Coefficient Coefficient::monomial(const Rational& r, const ParamMonomial& pm) {
    Coefficient c;
    if (!r.is_zero()) c.terms_[pm] = r;
    return c;
}

bool Coefficient::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.trivial();
}

Rational Coefficient::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("coefficient is not a plain rational: " + str());
    return terms_.begin()->second;
}

Coefficient Coefficient::operator-() const {
    Coefficient r;
    for (const auto& [pm, v] : terms_) r.terms_.emplace(pm, -v);
    return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    for (const auto& [pm, v] : o.terms_) add_term(pm, v);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    for (const auto& [pm, v] : o.terms_) add_term(pm, -v);
    return *this;
}

Coefficient operator*(const Coefficient& x, const Coefficient& y) {
    Coefficient r;
    for (const auto& [pa, va] : x.terms_)
        for (const auto& [pb, vb] : y.terms_)
            r.add_term({pa.ze + pb.ze, pa.me + pb.me, pa.ae + pb.ae}, va * vb);
    return r;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
    *this = *this * o;
    return *this;
}

Coefficient Coefficient::pow(unsigned e) const {
    Coefficient r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

Coefficient Coefficient::eval(const ParamBindings& b) const {
    Coefficient out;
    for (const auto& [pm, v] : terms_) {
        Rational r = v;
        ParamMonomial rest = pm;
        if (b.z) {
            if (b.z->is_zero() && pm.ze < 0)
                throw DivisionByZero("z bound to 0 with negative z-power present");
            r *= b.z->pow(pm.ze);
            rest.ze = 0;
        }
        if (b.m) {
            r *= b.m->pow(pm.me);
            rest.me = 0;
        }
        if (b.a) {
            r *= b.a->pow(pm.ae);
            rest.ae = 0;
        }
        out.add_term(rest, r);
    }
    return out;
}

std::string render_monomial_body(const ParamMonomial& pm, const Rational& magnitude) {
    std::vector<std::string> parts;
    if (!(magnitude == Rational(1)) || pm.trivial()) parts.push_back(magnitude.str());
    auto emit = [&](const char* name, int e) {
        if (e == 0) return;
        std::string p = name;
        if (e != 1) p += "^" + std::to_string(e);
        parts.push_back(p);
    };
    emit("z", pm.ze);
    emit("m", static_cast<int>(pm.me));
    emit("a", static_cast<int>(pm.ae));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "*";
        out += parts[i];
    }
    return out;
}

std::vector<RenderedTerm> render_terms(const Coefficient& c) {
    std::vector<RenderedTerm> out;
    for (const auto& [pm, v] : c.terms()) {
        RenderedTerm t;
        t.negative = v.is_negative();
        t.body = render_monomial_body(pm, t.negative ? -v : v);
        out.push_back(std::move(t));
    }
    return out;
}

std::string Coefficient::str() const {
    if (terms_.empty()) return "0";
    auto parts = render_terms(*this);
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0) {
            if (parts[i].negative) out += "-";
        } else {
            out += parts[i].negative ? " - " : " + ";
        }
        out += parts[i].body;
    }
    return out;
}

} // namespace qse
