#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "euclid/domain.hpp"
#include "euclid/element.hpp"
#include "euclid/euclidean_function.hpp"
#include "euclid/report.hpp"

namespace euclid {

struct CheckOptions {
  /// Record every violation instead of stopping at the first one in
  /// iteration order.
  bool collect_all = false;
};

/// Checks one predicate over the window. Pairs are visited in the product
/// order of enumerate_nonzero (a outer, b inner); for Euclidean and
/// UniquelyEuclidean, a = 0 is visited after the window. The canonical
/// witness is the first violation in that order, whatever the thread count.
///
/// Supported properties: Euclidean, StronglyEuclidean, UltraEuclidean,
/// UniquelyEuclidean. Pairs whose values cannot be decided (series residues
/// vanishing mod x^T, PhiDeg beyond its table, windowed enumerations that
/// found fewer than two divisions) are counted in pairs_skipped.
PropertyReport check_property(Property property, const EuclideanFnSpec& f, const DomainSpec& domain,
                              const Window& window, CheckOptions options = {});

/// Function values supplied from outside eval_f; nullopt means undecidable.
using Valuation = std::function<std::optional<Nat>(const Element&)>;

/// f(a) <= f(ab) and f(a+b) <= max(f(a), f(b)) over an arbitrary valuation.
/// Used for refined functions. The reports carry no function spec.
PropertyReport check_strongly(const Valuation& value, const DomainSpec& domain, const Window& window,
                              CheckOptions options = {});
PropertyReport check_ultra(const Valuation& value, const DomainSpec& domain, const Window& window,
                           CheckOptions options = {});

struct UnitLemmaReport {
  PropertyReport unit_equality;  // f(a) = f(ab)  <=>  b is a unit
  PropertyReport min_at_units;   // argmin f over the window = units in the window
};

/// Both lemmas presuppose a strongly Euclidean f; when the strongly check
/// finds a violation on the window, both reports are NotApplicable.
UnitLemmaReport check_unit_lemmas(const EuclideanFnSpec& f, const DomainSpec& domain, const Window& window);

enum class Consistency { Consistent, Inconclusive, TheoremContradiction };
std::string_view to_string(Consistency c);

struct ConsistencyFlag {
  std::string relation;
  Consistency status = Consistency::Consistent;
  std::string detail;

  friend bool operator==(const ConsistencyFlag&, const ConsistencyFlag&) = default;
};

struct MatrixReport {
  PropertyReport euclidean, strongly, ultra, uniquely;
  std::vector<ConsistencyFlag> flags;

  bool has_contradiction() const;
};

/// Runs the four predicate checks and compares the verdicts against
/// "uniquely => strongly", "uniquely <=> strongly and ultra" and, under a
/// strongly Euclidean f, "uniquely <=> ultra". Flags are derived from the
/// verdicts alone: a NoViolationFound verdict facing a Violated one is
/// Inconclusive; only exhaustive verdicts can produce TheoremContradiction.
MatrixReport theorem_matrix(const EuclideanFnSpec& f, const DomainSpec& domain, const Window& window);

/// Consistency flags for a set of verdicts (exposed for testing).
std::vector<ConsistencyFlag> consistency_flags(Verdict euclidean, Verdict strongly, Verdict ultra,
                                               Verdict uniquely);

/// Re-derives the canonical witness of a Violated report from raw
/// arithmetic and eval_f. Returns false if it does not reproduce, or if the
/// report is not Violated or carries no function spec.
bool replay_witness(const PropertyReport& report);

}  // namespace euclid
