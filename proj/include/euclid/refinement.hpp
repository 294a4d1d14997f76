#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

#include "euclid/domain.hpp"
#include "euclid/element.hpp"
#include "euclid/euclidean_function.hpp"
#include "euclid/property_lab.hpp"
#include "euclid/report.hpp"

namespace euclid {

enum class Certainty { Exact, UpperBound };
enum class RefineReason { ClosedFormField, FixedPointStrong, MonotoneBound, BoundedSearch };

std::string_view to_string(Certainty c);
std::string_view to_string(RefineReason r);
std::optional<Certainty> certainty_from_string(std::string_view s);
std::optional<RefineReason> reason_from_string(std::string_view s);

/// A value of f~(a) = min over nonzero b of f(ab), with the reason it is
/// known. BoundedSearch values are always UpperBound.
struct CertifiedValue {
  Nat value;
  Certainty certainty = Certainty::Exact;
  RefineReason reason = RefineReason::ClosedFormField;

  bool exact() const noexcept { return certainty == Certainty::Exact; }
  friend bool operator==(const CertifiedValue&, const CertifiedValue&) = default;
};

/// auto: closed forms first, then a windowed search if none applies.
/// bounded: always the windowed search.
struct RefineStrategy {
  bool bounded = false;
  std::optional<Window> window;

  static RefineStrategy automatic(std::optional<Window> fallback = std::nullopt) {
    return {false, fallback};
  }
  static RefineStrategy search(Window w) { return {true, w}; }
};

/// f~(a). Auto order: ClosedFormField (fields), FixedPointStrong (built-in
/// strongly Euclidean f), MonotoneBound (exceptions over a strongly
/// Euclidean base), BoundedSearch over the strategy's window.
/// Errors: EvalAtZero; WindowRequired when a search is needed but no window
/// was given; PrecisionExhausted when no multiple in the window evaluates.
CertifiedValue refine_eval(const EuclideanFnSpec& f, const Element& a, const RefineStrategy& strategy = {});

/// Memoizing evaluator of f~ shared by the table and the property checks.
/// Thread-safe.
class Refiner {
 public:
  Refiner(EuclideanFnSpec f, RefineStrategy strategy);

  CertifiedValue operator()(const Element& a) const;
  /// Exact value or nullopt (UpperBound, or undecidable).
  std::optional<Nat> exact(const Element& a) const;

 private:
  EuclideanFnSpec f_;
  RefineStrategy strategy_;
  mutable std::mutex mutex_;
  mutable std::map<Element, CertifiedValue, ElementLess> cache_;
};

struct RefinementTable {
  DomainSpec domain;
  Window window;
  std::vector<std::pair<Element, CertifiedValue>> entries;  // window order
  bool all_exact = true;

  friend bool operator==(const RefinementTable&, const RefinementTable&) = default;
};

RefinementTable refine_function(const EuclideanFnSpec& f, const DomainSpec& domain, const Window& window,
                                const RefineStrategy& strategy = {});

struct RefinementReport {
  RefinementTable table;
  PropertyReport strongly;      // on f~, Exact values only
  PropertyReport ultra;         // on f~, Exact values only
  PropertyReport fixed_point;   // f~ = f on the window
  PropertyReport f_strongly;    // strongly on f itself
  ConsistencyFlag fixed_point_flag;  // "f~ = f <=> f strongly Euclidean"
};

/// Builds f~ on the window (values off the window are refined on demand,
/// with the window as the search fallback) and checks it.
RefinementReport check_refinement_properties(const EuclideanFnSpec& f, const DomainSpec& domain,
                                             const Window& window);

}  // namespace euclid
