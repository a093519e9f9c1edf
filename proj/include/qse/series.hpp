#pragma once
#include "qse/op_element.hpp"

namespace qse {

// Truncated expansion in z: coefficient of z^k is a shift-free OpElement whose
// Coefficients carry no z-powers (z has been made explicit by the expansion).
class SeriesElement {
public:
    SeriesElement(int order, int copies);

    int order() const { return order_; }
    int copies() const { return copies_; }
    const OpElement& at(int k) const;
    OpElement& at(int k);

    SeriesElement operator-() const;
    SeriesElement& operator+=(const SeriesElement& o);
    SeriesElement& operator-=(const SeriesElement& o);
    friend SeriesElement operator+(SeriesElement x, const SeriesElement& y) { return x += y; }
    friend SeriesElement operator-(SeriesElement x, const SeriesElement& y) { return x -= y; }
    // truncating product; result order is min of the operand orders
    friend SeriesElement operator*(const SeriesElement& x, const SeriesElement& y);

    friend bool operator==(const SeriesElement&, const SeriesElement&) = default;

    std::string str() const;

private:
    int order_;
    int copies_;
    std::vector<OpElement> coeffs_;  // index k = order in z
};

// Expands every shift factor as its exponential series and makes explicit
// z-powers in coefficients part of the order bookkeeping. Orders below zero
// must cancel exactly; otherwise NegativeOrderResidual.
SeriesElement series_expand(const OpElement& e, int order);

// z^0 term of the expansion (the classical limit)
OpElement series_classical_limit(const OpElement& e);

// expand(commutator(x,y)) == expand(x)*expand(y) - expand(y)*expand(x), order N
bool series_consistency_check(const OpElement& x, const OpElement& y, int order);

} // namespace qse
