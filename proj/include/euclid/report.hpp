#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "euclid/division.hpp"
#include "euclid/domain.hpp"
#include "euclid/element.hpp"
#include "euclid/euclidean_function.hpp"

namespace euclid {

enum class Property {
  Euclidean,
  StronglyEuclidean,
  UltraEuclidean,
  UniquelyEuclidean,
  UnitEquality,
  MinAtUnits,
  UnitFieldClosure,
  RefinementFixedPoint,
};

/// Three-valued outcome of a windowed check, plus NotApplicable for lemma
/// checks whose hypothesis failed on the window.
enum class Verdict { Violated, NoViolationFound, ExhaustivelyVerified, NotApplicable };

std::string_view to_string(Property p);
std::string_view to_string(Verdict v);
std::optional<Property> property_from_string(std::string_view s);
std::optional<Verdict> verdict_from_string(std::string_view s);

/// Elements and function values that refute a property. `divisions` holds
/// the competing divisions for uniqueness failures.
struct Witness {
  std::vector<Element> elements;
  std::vector<Nat> values;
  std::vector<CandidateDivision> divisions;
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct PropertyReport {
  Property property = Property::Euclidean;
  DomainSpec domain;
  std::optional<EuclideanFnSpec> fn;
  Window window;
  Verdict verdict = Verdict::NoViolationFound;
  std::vector<Witness> witnesses;  // first is the canonical witness
  std::uint64_t pairs_checked = 0;
  std::uint64_t pairs_skipped = 0;

  bool violated() const noexcept { return verdict == Verdict::Violated; }
  bool holds_on_window() const noexcept {
    return verdict == Verdict::NoViolationFound || verdict == Verdict::ExhaustivelyVerified;
  }

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

}  // namespace euclid
