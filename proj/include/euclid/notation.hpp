#pragma once

#include <string>
#include <string_view>

#include "euclid/domain.hpp"
#include "euclid/element.hpp"

namespace euclid {

/// Ascii is the parseable plain-text grammar used on the command line and
/// in JSON. Pretty is for human-readable reports (alpha/beta, sqrt sign).
enum class Notation { Ascii, Pretty };

/// Element grammar:
///   Integers       decimal with optional sign: -17
///   QuadraticRing  sum of terms `r`, `r*sqrt(d)`, with r an integer or a
///                  half-integer `u/2`; `i` may stand for sqrt(-1):
///                  1/2+1/2*sqrt(-3), 2-i
///   FiniteField    residue (may be negative); F4 also takes a (alpha), b (beta)
///   PolyRing       sum of terms `c*x^n`, `c*x`, `x^n`, `c`; c as above for
///                  the coefficient field, the `*` is optional: x^3+x+1, a*x+b
///   SeriesRing     polynomial grammar, optionally ending in +O(x^T)
/// Throws ParseError on malformed text.
Element parse_element(const DomainSpec& domain, std::string_view text);

std::string render(const Element& a, Notation notation = Notation::Ascii);

}  // namespace euclid
