#pragma once
#include <string>

#include "qse/op_element.hpp"

namespace qse {

// Parses the expression grammar
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' int)?
//   atom   := number | 'z' | 'm' | 'a' | 'x' | 't' | 'dx' | 'dt'
//           | 'Sx' | 'St' | 'Et' | '(' expr ')' | '[' expr ',' expr ']'
//   number := digits ('/' digits)?
// into a single-copy element. Negative exponents are legal on z, Sx, St and Et
// only (IllegalExponent otherwise); [.,.] is the commutator. Renderings from
// OpElement::str() re-parse to the same element.
OpElement parse_element(const std::string& src);

} // namespace qse
