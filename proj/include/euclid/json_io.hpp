#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "euclid/conjecture_search.hpp"
#include "euclid/decomposition.hpp"
#include "euclid/division.hpp"
#include "euclid/domain.hpp"
#include "euclid/element.hpp"
#include "euclid/euclidean_function.hpp"
#include "euclid/property_lab.hpp"
#include "euclid/refinement.hpp"
#include "euclid/report.hpp"

namespace euclid {

/// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
using Json = nlohmann::json;

inline constexpr std::string_view kReportSchema = "euclid-lab-report/1";

/// "NoViolationFound" -> "no_violation_found"; used for every enum in JSON.
std::string snake_case(std::string_view camel);

// Elements are written in the ASCII notation of notation.hpp and read back
// with the domain carried by the enclosing object. Readers throw ParseError
// on malformed input.

Json to_json(const DomainSpec& d);
DomainSpec domain_from_json(const Json& j);

Json to_json(const Element& a);
Element element_from_json(const DomainSpec& d, const Json& j);

/// CLI name of a function kind: abs, deg, ord, norm, phi, table, exc.
std::string_view fn_kind_name(FnKind k);
std::optional<FnKind> fn_kind_from_name(std::string_view s);

Json to_json(const EuclideanFnSpec& f);
EuclideanFnSpec fn_from_json(const DomainSpec& d, const Json& j);

Json to_json(const CandidateDivision& div);
CandidateDivision division_from_json(const DomainSpec& d, const Json& j);

Json to_json(const EnumerationResult& r);
EnumerationResult enumeration_from_json(const DomainSpec& d, const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const DomainSpec& d, const Json& j);

Json to_json(const PropertyReport& r);
PropertyReport property_report_from_json(const Json& j);

Json to_json(const ConsistencyFlag& f);
ConsistencyFlag flag_from_json(const Json& j);

Json to_json(const MatrixReport& m);
MatrixReport matrix_from_json(const Json& j);

Json to_json(const CertifiedValue& v);
CertifiedValue certified_from_json(const Json& j);

Json to_json(const RefinementTable& t);
RefinementTable refinement_table_from_json(const Json& j);

Json to_json(const RefinementReport& r);
RefinementReport refinement_report_from_json(const Json& j);

Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const DomainSpec& d, const Json& j);

Json to_json(const CandidateRecord& r);
CandidateRecord record_from_json(const DomainSpec& d, const Json& j);

/// `elapsed_ms` is written only when include_timing is set.
Json to_json(const SearchReport& r, bool include_timing = false);
SearchReport search_from_json(const Json& j);

/// Top-level report: {"schema", "command", "args", "result", ["timing_ms"]}.
struct Report {
  std::string command;
  Json args = Json::object();
  Json result = Json::object();
  std::optional<double> timing_ms;

  friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

/// Pretty JSON with sorted keys and a trailing newline.
std::string dump(const Json& j);

}  // namespace euclid
