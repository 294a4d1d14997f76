#pragma once

#include <vector>

#include "euclid/element.hpp"
#include "euclid/errors.hpp"
#include "euclid/euclidean_function.hpp"
#include "euclid/report.hpp"

namespace euclid {

/// a = sum coefficients[i] * base^i with every coefficient zero or a unit.
struct Decomposition {
  Element base;
  std::vector<Element> coefficients;  // lowest power first

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Raised by decompose_by; `witness` is the offending a_i or r_i.
class DecompositionError : public Error {
 public:
  DecompositionError(ErrorCode code, const std::string& message, Element witness)
      : Error(code, message), witness_(std::move(witness)) {}

  const Element& witness() const noexcept { return witness_; }

 private:
  Element witness_;
};

/// Expands a in powers of the non-unit x by repeated division a_i = q*x + r,
/// each step required to have exactly one valid division under f with r
/// zero or a unit, and f(q) < f(a_i) so the loop must terminate.
/// Errors: NonUniqueStep, NonUnitRemainder, NoDescent (DecompositionError);
/// DivisionByZero for x = 0; InvalidFunction if x is a unit.
Decomposition decompose_by(const EuclideanFnSpec& f, const Element& a, const Element& x,
                           const std::optional<Window>& window = std::nullopt);

/// sum coefficients[i] * base^i by Horner's rule.
Element horner(const Decomposition& d);

/// Checks that u + v is a unit for all units u, v in the window with
/// u + v != 0, i.e. that the units together with 0 are closed under addition.
PropertyReport unit_field_closure(const DomainSpec& domain, const Window& window);

}  // namespace euclid
