#pragma once

#include <cstdint>
#include <string>

#include "euclid/finite_field.hpp"

namespace euclid {

enum class DomainKind { Integers, QuadraticRing, FiniteField, PolyRing, SeriesRing };

/// A concrete integral domain. Only the fields relevant to `kind` are
/// meaningful; the factories below zero the rest so that equality is exact.
struct DomainSpec {
  DomainKind kind = DomainKind::Integers;
  int d = 0;          // QuadraticRing
  int q = 0;          // FiniteField, PolyRing, SeriesRing
  int precision = 0;  // SeriesRing: elements live modulo x^precision

  static DomainSpec integers();
  static DomainSpec quadratic(int d);
  static DomainSpec finite_field(int q);
  static DomainSpec poly(int q);
  static DomainSpec series(int q, int precision);

  bool operator==(const DomainSpec&) const = default;

  bool is_field() const noexcept { return kind == DomainKind::FiniteField; }
  bool has_coefficient_field() const noexcept {
    return kind == DomainKind::FiniteField || kind == DomainKind::PolyRing ||
           kind == DomainKind::SeriesRing;
  }
  /// d = 1 (mod 4): the ring is Z[(1+sqrt d)/2].
  bool half_lattice() const noexcept {
    return kind == DomainKind::QuadraticRing && ((d % 4) + 4) % 4 == 1;
  }
  const FiniteField& field() const { return FiniteField::get(q); }
};

/// Throws InvalidDomain when a parameter is outside the supported sets.
void validate(const DomainSpec& domain);

/// Short name: "Z", "O(-1)", "F4", "F2[x]", "F2[[x]]/x^8".
std::string describe(const DomainSpec& domain);

/// Finite slice of a domain used to finitize universal quantifiers.
/// `bound` is the magnitude bound M for Integers, the doubled-coordinate
/// bound for QuadraticRing and the maximum degree D for PolyRing. Finite
/// fields and truncated series rings are always enumerated in full.
struct Window {
  std::int64_t bound = 0;

  static Window magnitude(std::int64_t m) { return Window{m}; }
  static Window degree(std::int64_t d) { return Window{d}; }
  static Window whole() { return Window{0}; }

  bool operator==(const Window&) const = default;
};

void validate(const DomainSpec& domain, const Window& window);

/// True when a window over `domain` covers every element (FiniteField, or
/// SeriesRing residues at its precision).
bool window_is_exhaustive(const DomainSpec& domain) noexcept;

std::string describe(const DomainSpec& domain, const Window& window);

}  // namespace euclid
