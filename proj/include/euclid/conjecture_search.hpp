#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "euclid/domain.hpp"
#include "euclid/euclidean_function.hpp"
#include "euclid/refinement.hpp"
#include "euclid/report.hpp"

namespace euclid {

/// Every table F_q^x -> {0..max_value}.
struct AllFieldTables {
  std::uint64_t max_value = 1;
  friend bool operator==(const AllFieldTables&, const AllFieldTables&) = default;
};

/// phi o deg with phi strictly increasing on degrees 0..max_degree, values
/// <= max_value, continued with slope 1 up to degree 2*max_degree; then
/// 1..exception_budget points of degree <= exception_max_degree overridden
/// with values in 0..max_value.
struct PhiDegPerturbations {
  std::uint64_t max_degree = 3;
  std::uint64_t max_value = 4;
  std::uint64_t exception_budget = 1;
  std::uint64_t exception_max_degree = 0;
  friend bool operator==(const PhiDegPerturbations&, const PhiDegPerturbations&) = default;
};

/// |.| on Z with 1..exception_budget points in [-M, M] overridden with
/// values in 0..max_value.
struct IntegerPerturbations {
  std::uint64_t M = 6;
  std::uint64_t max_value = 12;
  std::uint64_t exception_budget = 1;
  friend bool operator==(const IntegerPerturbations&, const IntegerPerturbations&) = default;
};

using FamilyGenerator = std::variant<AllFieldTables, PhiDegPerturbations, IntegerPerturbations>;

struct FamilySpec {
  DomainSpec domain;
  FamilyGenerator generator;
  std::uint64_t budget = 10000;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Deterministic, deduplicated, at most `budget` functions.
/// Errors: BudgetZero; InvalidDomain when the generator does not fit the domain.
std::vector<EuclideanFnSpec> enumerate_family(const FamilySpec& family);

/// Where a function left the pipeline.
enum class Stage {
  NotEuclidean,       // Euclidean check violated
  NotUltra,           // ultra check violated
  Strongly,           // not strongly violated (cannot be a counterexample)
  RefinementUltra,    // reached f~, but f~ shows no exact ultra violation
  Survivor,           // f~ ultra violated on exact values
};

std::string_view to_string(Stage s);
std::optional<Stage> stage_from_string(std::string_view s);

struct CandidateRecord {
  std::uint64_t index = 0;  // position in the family enumeration
  EuclideanFnSpec fn;
  Stage stage = Stage::NotEuclidean;
  Verdict euclidean = Verdict::NoViolationFound;
  std::optional<Verdict> ultra;
  std::optional<Verdict> strongly;
  std::optional<Verdict> refinement_strongly;
  std::optional<Verdict> refinement_ultra;
  std::optional<bool> refinement_exact;  // every window value of f~ Exact
  std::optional<Witness> witness;        // of the check that decided the stage

  friend bool operator==(const CandidateRecord&, const CandidateRecord&) = default;
};

struct SearchReport {
  DomainSpec domain;
  Window window;
  std::uint64_t functions_examined = 0;
  std::uint64_t rejected_euclidean = 0;
  std::uint64_t rejected_ultra = 0;
  std::uint64_t rejected_strongly = 0;
  /// Functions that reached the refinement stage (ultra on the window,
  /// strongly violated), in enumeration order.
  std::vector<CandidateRecord> stage2;
  /// The subset of stage2 whose refinement is ultra-violated.
  std::vector<CandidateRecord> candidates;
  std::chrono::milliseconds elapsed{0};

  /// Equality ignores timing.
  friend bool operator==(const SearchReport& a, const SearchReport& b) {
    return a.domain == b.domain && a.window == b.window && a.functions_examined == b.functions_examined &&
           a.rejected_euclidean == b.rejected_euclidean && a.rejected_ultra == b.rejected_ultra &&
           a.rejected_strongly == b.rejected_strongly && a.stage2 == b.stage2 && a.candidates == b.candidates;
  }
};

/// Runs every function of the family through the filters.
SearchReport run_search(const FamilySpec& family, const Window& window);

/// Runs one function through the filters at the given window; the report
/// holds its record in stage2 (and candidates, if it survives) or counts
/// the rejection. `record` receives the full record either way.
SearchReport verify_candidate(const EuclideanFnSpec& f, const DomainSpec& domain, const Window& window,
                              CandidateRecord* record = nullptr);

/// The filter pipeline for a single function.
CandidateRecord classify(const EuclideanFnSpec& f, const DomainSpec& domain, const Window& window,
                         std::uint64_t index = 0);

}  // namespace euclid
