#pragma once

#include <cstdint>
#include <vector>

#include "euclid/domain.hpp"
#include "euclid/element.hpp"

namespace euclid {

/// Windows larger than this are rejected with InvalidWindow.
inline constexpr std::uint64_t kMaxWindowElements = std::uint64_t{1} << 22;

/// Every nonzero element of the window exactly once, in a fixed order:
///   Integers       1, -1, 2, -2, ..., M, -M (magnitude first, positive first)
///   QuadraticRing  lexicographic on doubled coordinates (u, v), each in [-M, M]
///   FiniteField    table index 1 .. q-1 (F4: 1, alpha, beta)
///   PolyRing       coefficient vectors read as base-q numerals, lowest
///                  coefficient least significant (F2: 1, x, x+1, x^2, ...)
///   SeriesRing     the same numeral order over all T coefficients
/// Windows nest as prefixes for Integers and PolyRing.
std::vector<Element> enumerate_nonzero(const DomainSpec& domain, const Window& window);

/// Number of nonzero elements enumerate_nonzero would produce.
std::uint64_t window_size(const DomainSpec& domain, const Window& window);

/// Strict order matching enumerate_nonzero's sequence.
bool enumeration_less(const Element& a, const Element& b);

bool in_window(const Window& window, const Element& a);

/// Units lying in the window. Computed by the closed form and cross-checked
/// against a scan for inverses inside the window; a disagreement throws
/// std::logic_error.
std::vector<Element> units_in_window(const DomainSpec& domain, const Window& window);

/// Element of a coefficient ring whose base-q numeral is `index`.
Element element_from_index(const DomainSpec& domain, std::uint64_t index);

}  // namespace euclid
