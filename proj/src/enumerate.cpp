#include "euclid/enumerate.hpp"

#include <stdexcept>
#include <string>

#include "euclid/errors.hpp"

namespace euclid {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::int64_t exp) {
  std::uint64_t result = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    result *= base;
    if (result > kMaxWindowElements + 1)
      throw Error(ErrorCode::InvalidWindow, "window exceeds " + std::to_string(kMaxWindowElements) + " elements");
  }
  return result;
}

}  // namespace

std::uint64_t window_size(const DomainSpec& domain, const Window& window) {
  validate(domain, window);
  switch (domain.kind) {
    case DomainKind::Integers: return 2 * static_cast<std::uint64_t>(window.bound);
    case DomainKind::QuadraticRing: {
      std::uint64_t count = 0;
      for (std::int64_t u = -window.bound; u <= window.bound; ++u)
        for (std::int64_t v = -window.bound; v <= window.bound; ++v) {
          const bool ok = domain.half_lattice() ? ((u - v) % 2 == 0) : (u % 2 == 0 && v % 2 == 0);
          if (ok && (u != 0 || v != 0)) ++count;
        }
      return count;
    }
    case DomainKind::FiniteField: return static_cast<std::uint64_t>(domain.q - 1);
    case DomainKind::PolyRing: return checked_power(domain.q, window.bound + 1) - 1;
    case DomainKind::SeriesRing: return checked_power(domain.q, domain.precision) - 1;
  }
  return 0;
}

Element element_from_index(const DomainSpec& domain, std::uint64_t index) {
  std::vector<FieldElem> c;
  const auto q = static_cast<std::uint64_t>(domain.q);
  while (index > 0) {
    c.push_back(static_cast<FieldElem>(index % q));
    index /= q;
  }
  switch (domain.kind) {
    case DomainKind::FiniteField:
      return Element(domain, c.empty() ? FieldElem{0} : c[0]);
    case DomainKind::PolyRing: return Element::poly(domain.q, std::move(c));
    case DomainKind::SeriesRing: return Element::series(domain.q, domain.precision, std::move(c));
    default:
      throw Error(ErrorCode::DomainMismatch, describe(domain) + " has no coefficient field");
  }
}

std::vector<Element> enumerate_nonzero(const DomainSpec& domain, const Window& window) {
  const std::uint64_t n = window_size(domain, window);
  if (n > kMaxWindowElements)
    throw Error(ErrorCode::InvalidWindow, "window exceeds " + std::to_string(kMaxWindowElements) + " elements");
  std::vector<Element> out;
  out.reserve(n);
  switch (domain.kind) {
    case DomainKind::Integers:
      for (std::int64_t m = 1; m <= window.bound; ++m) {
        out.push_back(Element(domain, BigInt(m)));
        out.push_back(Element(domain, BigInt(-m)));
      }
      break;
    case DomainKind::QuadraticRing:
      for (std::int64_t u = -window.bound; u <= window.bound; ++u)
        for (std::int64_t v = -window.bound; v <= window.bound; ++v) {
          const bool ok = domain.half_lattice() ? ((u - v) % 2 == 0) : (u % 2 == 0 && v % 2 == 0);
          if (ok && (u != 0 || v != 0)) out.push_back(Element(domain, QuadCoords{BigInt(u), BigInt(v)}));
        }
      break;
    case DomainKind::FiniteField:
    case DomainKind::PolyRing:
    case DomainKind::SeriesRing:
      for (std::uint64_t i = 1; i <= n; ++i) out.push_back(element_from_index(domain, i));
      break;
  }
  return out;
}

bool enumeration_less(const Element& a, const Element& b) {
  if (a.domain().kind == DomainKind::Integers && b.domain().kind == DomainKind::Integers) {
    const BigInt ma = abs(a.as_integer());
    const BigInt mb = abs(b.as_integer());
    if (ma != mb) return ma < mb;
    return a.as_integer() > b.as_integer();
  }
  return ElementLess{}(a, b);
}

bool in_window(const Window& window, const Element& a) {
  if (a.is_zero()) return false;
  switch (a.domain().kind) {
    case DomainKind::Integers: return abs(a.as_integer()) <= window.bound;
    case DomainKind::QuadraticRing: {
      const auto& p = a.as_quadratic();
      return abs(p.u) <= window.bound && abs(p.v) <= window.bound;
    }
    case DomainKind::PolyRing: return degree(a) <= window.bound;
    case DomainKind::FiniteField:
    case DomainKind::SeriesRing: return true;
  }
  return false;
}

std::vector<Element> units_in_window(const DomainSpec& domain, const Window& window) {
  std::vector<Element> units;
  for (const Element& a : enumerate_nonzero(domain, window)) {
    const bool closed_form = is_unit_known(a);
    const auto inv = inverse(a);
    const bool scanned = inv.has_value() && in_window(window, *inv) && (a * *inv).is_one();
    if (closed_form != scanned)
      throw std::logic_error("unit closed form disagrees with inverse scan in " + describe(domain));
    if (closed_form) units.push_back(a);
  }
  return units;
}

}  // namespace euclid
