#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "euclid/domain.hpp"

namespace euclid {

using BigInt = boost::multiprecision::cpp_int;

/// Doubled coordinates: the element (u + v*sqrt(d)) / 2.
struct QuadCoords {
  BigInt u;
  BigInt v;
  bool operator==(const QuadCoords&) const = default;
};

/// Lowest degree first, no trailing zero; empty means 0.
struct PolyCoeffs {
  std::vector<FieldElem> c;
  bool operator==(const PolyCoeffs&) const = default;
};

/// Residue modulo x^T; always exactly T coefficients.
struct SeriesCoeffs {
  std::vector<FieldElem> c;
  bool operator==(const SeriesCoeffs&) const = default;
};

using Payload = std::variant<BigInt, QuadCoords, FieldElem, PolyCoeffs, SeriesCoeffs>;

/// An exact element of a concrete domain. Immutable once built; every
/// constructor validates the payload against the domain's representation
/// invariants (lattice parity, canonical trailing zeros, series length).
class Element {
 public:
  Element(DomainSpec domain, Payload payload);

  static Element zero(const DomainSpec& domain);
  static Element one(const DomainSpec& domain);
  static Element integer(BigInt value);
  static Element quadratic(int d, BigInt u2, BigInt v2);
  static Element field(int q, FieldElem value);
  static Element poly(int q, std::vector<FieldElem> coeffs);
  static Element series(int q, int precision, std::vector<FieldElem> coeffs);
  /// The generator x of a polynomial or series ring.
  static Element variable(const DomainSpec& domain);
  /// Embeds an integer via the unique ring map Z -> R.
  static Element from_int(const DomainSpec& domain, long long n);

  const DomainSpec& domain() const noexcept { return domain_; }
  const Payload& payload() const noexcept { return payload_; }

  bool is_zero() const noexcept;
  bool is_one() const;

  const BigInt& as_integer() const;
  const QuadCoords& as_quadratic() const;
  FieldElem as_field() const;
  /// Coefficients of a polynomial or series element.
  const std::vector<FieldElem>& coefficients() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.domain_ == b.domain_ && a.payload_ == b.payload_;
  }

 private:
  DomainSpec domain_;
  Payload payload_;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator-(const Element& a);
Element pow(const Element& a, unsigned n);

/// Closed-form unit test per domain: +-1 in Z, nonzero in a field, nonzero
/// constants in K[x], ord = 0 in K[[x]], norm +-1 in O_d.
bool is_unit_known(const Element& a);

/// Returns q with a = q*b when b divides a. Throws DivisionByZero for b = 0.
/// SeriesRing quotients are only determined modulo x^(T - ord b); the
/// returned q uses zero for the undetermined top coefficients, which keeps
/// a = q*b exact modulo x^T.
std::optional<Element> exact_quotient(const Element& a, const Element& b);

/// Polynomial long division over the coefficient field: a = q*b + r with
/// r = 0 or deg r < deg b.
std::pair<Element, Element> poly_divmod(const Element& a, const Element& b);

/// Multiplicative inverse for units, nullopt otherwise.
std::optional<Element> inverse(const Element& a);

/// Degree of a nonzero polynomial.
int degree(const Element& a);
/// Order (lowest nonzero index) of a series residue. Throws
/// PrecisionExhausted for a residue that is 0 modulo x^T.
int order(const Element& a);
/// a^2 - b^2 d for a + b sqrt(d), computed exactly from doubled coordinates.
BigInt signed_norm(const Element& a);

void require_same_domain(const Element& a, const Element& b);

/// Strict weak order on the payload (domain first). Used for map keys and
/// set comparisons; not the enumeration order.
struct ElementLess {
  bool operator()(const Element& a, const Element& b) const;
};

}  // namespace euclid
