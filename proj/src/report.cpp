#include "euclid/report.hpp"

#include <array>
#include <utility>

namespace euclid {

namespace {

constexpr std::array<std::pair<Property, std::string_view>, 8> kProperties{{
    {Property::Euclidean, "Euclidean"},
    {Property::StronglyEuclidean, "StronglyEuclidean"},
    {Property::UltraEuclidean, "UltraEuclidean"},
    {Property::UniquelyEuclidean, "UniquelyEuclidean"},
    {Property::UnitEquality, "UnitEquality"},
    {Property::MinAtUnits, "MinAtUnits"},
    {Property::UnitFieldClosure, "UnitFieldClosure"},
    {Property::RefinementFixedPoint, "RefinementFixedPoint"},
}};

constexpr std::array<std::pair<Verdict, std::string_view>, 4> kVerdicts{{
    {Verdict::Violated, "Violated"},
    {Verdict::NoViolationFound, "NoViolationFound"},
    {Verdict::ExhaustivelyVerified, "ExhaustivelyVerified"},
    {Verdict::NotApplicable, "NotApplicable"},
}};

}  // namespace

std::string_view to_string(Property p) {
  for (const auto& [k, s] : kProperties)
    if (k == p) return s;
  return "?";
}

std::string_view to_string(Verdict v) {
  for (const auto& [k, s] : kVerdicts)
    if (k == v) return s;
  return "?";
}

std::optional<Property> property_from_string(std::string_view s) {
  for (const auto& [k, name] : kProperties)
    if (name == s) return k;
  return std::nullopt;
}

std::optional<Verdict> verdict_from_string(std::string_view s) {
  for (const auto& [k, name] : kVerdicts)
    if (name == s) return k;
  return std::nullopt;
}

}  // namespace euclid
