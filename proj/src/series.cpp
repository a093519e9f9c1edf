#include "qse/series.hpp"

namespace qse {

SeriesElement::SeriesElement(int order, int copies) : order_(order), copies_(copies) {
    if (order < 0) throw IndexOutOfRange("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, OpElement(copies));
}

const OpElement& SeriesElement::at(int k) const {
    if (k < 0 || k > order_) throw IndexOutOfRange("series index out of range");
    return coeffs_[static_cast<std::size_t>(k)];
}

OpElement& SeriesElement::at(int k) {
    if (k < 0 || k > order_) throw IndexOutOfRange("series index out of range");
    return coeffs_[static_cast<std::size_t>(k)];
}

SeriesElement SeriesElement::operator-() const {
    SeriesElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

SeriesElement& SeriesElement::operator+=(const SeriesElement& o) {
    if (copies_ != o.copies_) throw IndexOutOfRange("copy count mismatch in series +");
    if (o.order_ < order_) {
        order_ = o.order_;
        coeffs_.resize(static_cast<std::size_t>(order_) + 1);
    }
    for (int k = 0; k <= order_; ++k) coeffs_[static_cast<std::size_t>(k)] += o.coeffs_[static_cast<std::size_t>(k)];
    return *this;
}

SeriesElement& SeriesElement::operator-=(const SeriesElement& o) {
    return *this += -o;
}

SeriesElement operator*(const SeriesElement& x, const SeriesElement& y) {
    if (x.copies() != y.copies()) throw IndexOutOfRange("copy count mismatch in series *");
    SeriesElement r(std::min(x.order(), y.order()), x.copies());
    for (int k = 0; k <= r.order(); ++k)
        for (int i = 0; i <= k; ++i)
            r.at(k) += x.at(i) * y.at(k - i);
    return r;
}

std::string SeriesElement::str() const {
    std::string out;
    for (int k = 0; k <= order_; ++k) {
        if (!out.empty()) out += "\n";
        out += "z^" + std::to_string(k) + ": " + at(k).str();
    }
    return out;
}

namespace {

// (s z d)^j / j! with the z made explicit: returns the rational s^j / j!
Rational shift_series_coeff(int s, unsigned j) {
    Rational num = Rational(s).pow(static_cast<long>(j));
    Rational fact(1);
    for (unsigned i = 2; i <= j; ++i) fact *= Rational(static_cast<long>(i));
    return num / fact;
}

} // namespace

SeriesElement series_expand(const OpElement& e, int order) {
    if (order < 0) throw IndexOutOfRange("series order must be >= 0");
    const int n = e.copies();
    std::map<int, OpElement> acc;  // z-order -> shift-free element

    for (const auto& [mono, coeff] : e.terms()) {
        // shift slots of this monomial: (copy, x-sector?, shift power)
        struct Slot { int copy; bool xsec; int s; };
        std::vector<Slot> slots;
        for (int k = 0; k < n; ++k) {
            const auto& c = mono.copies[static_cast<std::size_t>(k)];
            if (c.sx != 0) slots.push_back({k, true, c.sx});
            if (c.ts != 0) slots.push_back({k, false, c.ts});
        }
        for (const auto& [pm, rat] : coeff.terms()) {
            const int base = pm.ze;
            if (base > order) continue;
            Coefficient zfree = Coefficient::monomial(rat, {0, pm.me, pm.ae});
            // distribute expansion orders j over the shift slots
            OpMonomial stripped = mono;
            for (auto& c : stripped.copies) { c.sx = 0; c.ts = 0; }
            // depth-first over slots, appending derivative powers
            struct Frame { std::size_t slot; int used; OpMonomial mono; Rational scale; };
            auto recurse = [&](auto&& self, std::size_t slot, int used, OpMonomial cur, Rational scale) -> void {
                if (slot == slots.size()) {
                    acc.try_emplace(base + used, OpElement(n));
                    acc.at(base + used) += OpElement::from_term(cur, zfree * Coefficient(scale));
                    return;
                }
                const auto& sl = slots[slot];
                for (int j = 0; base + used + j <= order; ++j) {
                    OpMonomial next = cur;
                    auto& ce = next.copies[static_cast<std::size_t>(sl.copy)];
                    if (sl.xsec) ce.dx += static_cast<unsigned>(j);
                    else ce.dt += static_cast<unsigned>(j);
                    self(self, slot + 1, used + j, std::move(next), scale * shift_series_coeff(sl.s, static_cast<unsigned>(j)));
                }
            };
            recurse(recurse, 0, 0, stripped, Rational(1));
        }
    }

    for (const auto& [k, el] : acc) {
        if (k < 0 && !el.is_zero())
            throw NegativeOrderResidual("nonzero coefficient at z^" + std::to_string(k) + ": " + el.str());
    }
    SeriesElement out(order, n);
    for (const auto& [k, el] : acc)
        if (k >= 0 && k <= order) out.at(k) += el;
    return out;
}

OpElement series_classical_limit(const OpElement& e) {
    return series_expand(e, 0).at(0);
}

bool series_consistency_check(const OpElement& x, const OpElement& y, int order) {
    SeriesElement lhs = series_expand(commutator(x, y), order);
    SeriesElement sx = series_expand(x, order);
    SeriesElement sy = series_expand(y, order);
    SeriesElement rhs = sx * sy - sy * sx;
    return lhs == rhs;
}

} // namespace qse
