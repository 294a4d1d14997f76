#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "euclid/domain.hpp"
#include "euclid/element.hpp"
#include "euclid/euclidean_function.hpp"

namespace euclid {

/// a = q*b + r, checked exactly when built; `valid` records whether
/// r = 0 or f(r) < f(b) under the function it was judged by.
struct CandidateDivision {
  Element a, b, q, r;
  bool valid = false;

  friend bool operator==(const CandidateDivision&, const CandidateDivision&) = default;
};

/// Builds a candidate division and judges it under f.
/// Throws IdentityFails if a != q*b + r.
CandidateDivision make_division(const EuclideanFnSpec& f, const Element& a, const Element& b,
                                const Element& q, const Element& r);

struct EnumerationResult {
  std::vector<CandidateDivision> divisions;  // valid ones, in remainder order
  bool complete = false;
  std::size_t skipped = 0;
};

struct QuotientRemainder {
  Element q;
  Element r;
};

/// True iff a = q*b + r and (r = 0 or f(r) < f(b)).
/// Throws IdentityFails when the identity is false, DivisionByZero for b = 0.
bool is_valid_division(const EuclideanFnSpec& f, const Element& a, const Element& b,
                       const Element& q, const Element& r);

/// One division valid under the domain's default function:
///   Integers       least non-negative remainder
///   PolyRing       long division
///   QuadraticRing  a/b rounded coordinate-wise in doubled coordinates to the
///                  nearest lattice point, ties toward zero
///   SeriesRing     r = 0 when ord a >= ord b, else q = 0 and r = a
///   FiniteField    q = a/b, r = 0
QuotientRemainder canonical_divide(const Element& a, const Element& b);

/// All valid divisions of a by b under f, searched remainder first: r = 0,
/// then every r with f(r) < f(b), keeping those where b divides a - r.
/// The search is complete when f's sublevel set is derivable; otherwise the
/// window bounds it (WindowRequired if none was given).
EnumerationResult enumerate_valid_divisions(const EuclideanFnSpec& f, const Element& a,
                                            const Element& b,
                                            const std::optional<Window>& window = std::nullopt);

struct GcdResult {
  Element g, s, t;  // g = s*a + t*b
};

/// Extended Euclid by iterated canonical_divide. g is normalized: positive
/// in Z, monic in K[x], 1 in a field, x^k in K[[x]], and in O_d the
/// greatest associate (lexicographic on doubled coordinates) under the torsion units.
GcdResult gcd_extended(const Element& a, const Element& b);

}  // namespace euclid
