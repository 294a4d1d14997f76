#include "euclid/json_io.hpp"

#include <cctype>

#include "euclid/errors.hpp"
#include "euclid/notation.hpp"

namespace euclid {

namespace {

/// Type and key errors from malformed documents surface as ParseError.
template <class Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace


namespace {

template <class E, std::size_t N>
E enum_from_json(const Json& j, const E (&all)[N], const char* what) {
  const std::string s = j.get<std::string>();
  for (E e : all)
    if (snake_case(to_string(e)) == s) return e;
  throw Error(ErrorCode::ParseError, std::string("unknown ") + what + " '" + s + "'");
}

constexpr Property kAllProperties[] = {
    Property::Euclidean,   Property::StronglyEuclidean, Property::UltraEuclidean,   Property::UniquelyEuclidean,
    Property::UnitEquality, Property::MinAtUnits,       Property::UnitFieldClosure, Property::RefinementFixedPoint};
constexpr Verdict kAllVerdicts[] = {Verdict::Violated, Verdict::NoViolationFound, Verdict::ExhaustivelyVerified,
                                    Verdict::NotApplicable};
constexpr Consistency kAllConsistency[] = {Consistency::Consistent, Consistency::Inconclusive,
                                           Consistency::TheoremContradiction};
constexpr Certainty kAllCertainty[] = {Certainty::Exact, Certainty::UpperBound};
constexpr RefineReason kAllReasons[] = {RefineReason::ClosedFormField, RefineReason::FixedPointStrong,
                                        RefineReason::MonotoneBound, RefineReason::BoundedSearch};
constexpr Stage kAllStages[] = {Stage::NotEuclidean, Stage::NotUltra, Stage::Strongly, Stage::RefinementUltra,
                                Stage::Survivor};

template <class E>
Json enum_json(E e) {
  return snake_case(to_string(e));
}

Json nats(const std::vector<Nat>& v) {
  Json out = Json::array();
  for (const Nat& n : v) out.push_back(n.value);
  return out;
}

std::vector<Nat> nats_from(const Json& j) {
  std::vector<Nat> out;
  for (const auto& v : j) out.emplace_back(v.get<std::uint64_t>());
  return out;
}

Json elements(const std::vector<Element>& v) {
  Json out = Json::array();
  for (const Element& e : v) out.push_back(to_json(e));
  return out;
}

std::vector<Element> elements_from(const DomainSpec& d, const Json& j) {
  std::vector<Element> out;
  for (const auto& e : j) out.push_back(element_from_json(d, e));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? enum_json(*v) : Json(nullptr);
}

}  // namespace

std::string snake_case(std::string_view camel) {
  std::string out;
  for (std::size_t i = 0; i < camel.size(); ++i) {
    const char c = camel[i];
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (i > 0) out += '_';
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      out += c;
    }
  }
  return out;
}

Json to_json(const DomainSpec& d) {
  Json j;
  j["name"] = describe(d);
  switch (d.kind) {
    case DomainKind::Integers: j["kind"] = "Z"; break;
    case DomainKind::QuadraticRing:
      j["kind"] = "quad";
      j["d"] = d.d;
      break;
    case DomainKind::FiniteField:
      j["kind"] = "field";
      j["q"] = d.q;
      break;
    case DomainKind::PolyRing:
      j["kind"] = "poly";
      j["q"] = d.q;
      break;
    case DomainKind::SeriesRing:
      j["kind"] = "series";
      j["q"] = d.q;
      j["precision"] = d.precision;
      break;
  }
  return j;
}

static DomainSpec domain_from_json_impl(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "Z") return DomainSpec::integers();
  if (kind == "quad") return DomainSpec::quadratic(j.at("d").get<int>());
  if (kind == "field") return DomainSpec::finite_field(j.at("q").get<int>());
  if (kind == "poly") return DomainSpec::poly(j.at("q").get<int>());
  if (kind == "series") return DomainSpec::series(j.at("q").get<int>(), j.at("precision").get<int>());
  throw Error(ErrorCode::ParseError, "unknown domain kind '" + kind + "'");
}

Json to_json(const Element& a) { return render(a); }

static Element element_from_json_impl(const DomainSpec& d, const Json& j) { return parse_element(d, j.get<std::string>()); }

std::string_view fn_kind_name(FnKind k) {
  switch (k) {
    case FnKind::AbsValue: return "abs";
    case FnKind::Degree: return "deg";
    case FnKind::Order: return "ord";
    case FnKind::QuadNorm: return "norm";
    case FnKind::PhiDeg: return "phi";
    case FnKind::FieldTable: return "table";
    case FnKind::ExceptionTable: return "exc";
  }
  return "?";
}

std::optional<FnKind> fn_kind_from_name(std::string_view s) {
  for (FnKind k : {FnKind::AbsValue, FnKind::Degree, FnKind::Order, FnKind::QuadNorm, FnKind::PhiDeg,
                   FnKind::FieldTable, FnKind::ExceptionTable})
    if (fn_kind_name(k) == s) return k;
  return std::nullopt;
}

Json to_json(const EuclideanFnSpec& f) {
  Json j;
  j["kind"] = fn_kind_name(f.kind);
  j["describe"] = describe(f);
  if (f.kind == FnKind::PhiDeg || (f.kind == FnKind::ExceptionTable && f.base == FnKind::PhiDeg))
    j["phi"] = nats(f.phi);
  if (f.kind == FnKind::FieldTable) {
    const DomainSpec field = DomainSpec::finite_field(f.field_q);
    j["q"] = f.field_q;
    Json table = Json::object();
    for (const auto& [k, v] : f.table) table[render(Element(field, k))] = v.value;
    j["table"] = table;
  }
  if (f.kind == FnKind::ExceptionTable) {
    j["base"] = fn_kind_name(f.base);
    Json exc = Json::array();
    for (const auto& [e, v] : f.exceptions) exc.push_back(Json::array({to_json(e), v.value}));
    j["exceptions"] = exc;
  }
  return j;
}

static EuclideanFnSpec fn_from_json_impl(const DomainSpec& d, const Json& j) {
  const std::string name = j.at("kind").get<std::string>();
  const auto kind = fn_kind_from_name(name);
  if (!kind) throw Error(ErrorCode::ParseError, "unknown function kind '" + name + "'");
  switch (*kind) {
    case FnKind::AbsValue: return EuclideanFnSpec::abs_value();
    case FnKind::Degree: return EuclideanFnSpec::degree();
    case FnKind::Order: return EuclideanFnSpec::order();
    case FnKind::QuadNorm: return EuclideanFnSpec::quad_norm();
    case FnKind::PhiDeg: return EuclideanFnSpec::phi_deg(nats_from(j.at("phi")));
    case FnKind::FieldTable: {
      const int q = j.at("q").get<int>();
      const DomainSpec field = DomainSpec::finite_field(q);
      std::map<FieldElem, Nat> table;
      for (const auto& [k, v] : j.at("table").items())
        table[parse_element(field, k).as_field()] = Nat(v.get<std::uint64_t>());
      return EuclideanFnSpec::field_table(q, std::move(table));
    }
    case FnKind::ExceptionTable: {
      const std::string base_name = j.at("base").get<std::string>();
      const auto base_kind = fn_kind_from_name(base_name);
      if (!base_kind) throw Error(ErrorCode::ParseError, "unknown base kind '" + base_name + "'");
      EuclideanFnSpec base;
      base.kind = *base_kind;
      if (*base_kind == FnKind::PhiDeg) base.phi = nats_from(j.at("phi"));
      std::vector<std::pair<Element, Nat>> exc;
      for (const auto& e : j.at("exceptions"))
        exc.emplace_back(element_from_json(d, e.at(0)), Nat(e.at(1).get<std::uint64_t>()));
      return EuclideanFnSpec::with_exceptions(base, std::move(exc));
    }
  }
  throw Error(ErrorCode::ParseError, "unknown function kind '" + name + "'");
}

Json to_json(const CandidateDivision& div) {
  return Json{{"a", to_json(div.a)}, {"b", to_json(div.b)}, {"q", to_json(div.q)},
              {"r", to_json(div.r)}, {"valid", div.valid}};
}

static CandidateDivision division_from_json_impl(const DomainSpec& d, const Json& j) {
  return CandidateDivision{element_from_json(d, j.at("a")), element_from_json(d, j.at("b")),
                           element_from_json(d, j.at("q")), element_from_json(d, j.at("r")),
                           j.at("valid").get<bool>()};
}

Json to_json(const EnumerationResult& r) {
  Json divs = Json::array();
  for (const auto& div : r.divisions) divs.push_back(to_json(div));
  return Json{{"divisions", divs}, {"complete", r.complete}, {"skipped", r.skipped}};
}

static EnumerationResult enumeration_from_json_impl(const DomainSpec& d, const Json& j) {
  EnumerationResult r;
  for (const auto& div : j.at("divisions")) r.divisions.push_back(division_from_json(d, div));
  r.complete = j.at("complete").get<bool>();
  r.skipped = j.at("skipped").get<std::size_t>();
  return r;
}

Json to_json(const Witness& w) {
  Json divs = Json::array();
  for (const auto& div : w.divisions) divs.push_back(to_json(div));
  return Json{{"elements", elements(w.elements)}, {"values", nats(w.values)}, {"divisions", divs}, {"note", w.note}};
}

static Witness witness_from_json_impl(const DomainSpec& d, const Json& j) {
  Witness w;
  w.elements = elements_from(d, j.at("elements"));
  w.values = nats_from(j.at("values"));
  for (const auto& div : j.at("divisions")) w.divisions.push_back(division_from_json(d, div));
  w.note = j.at("note").get<std::string>();
  return w;
}

Json to_json(const PropertyReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  return Json{{"property", enum_json(r.property)},
              {"domain", to_json(r.domain)},
              {"function", r.fn ? to_json(*r.fn) : Json(nullptr)},
              {"window", r.window.bound},
              {"verdict", enum_json(r.verdict)},
              {"witnesses", witnesses},
              {"pairs_checked", r.pairs_checked},
              {"pairs_skipped", r.pairs_skipped}};
}

static PropertyReport property_report_from_json_impl(const Json& j) {
  PropertyReport r;
  r.property = enum_from_json(j.at("property"), kAllProperties, "property");
  r.domain = domain_from_json(j.at("domain"));
  if (!j.at("function").is_null()) r.fn = fn_from_json(r.domain, j.at("function"));
  r.window = Window{j.at("window").get<std::int64_t>()};
  r.verdict = enum_from_json(j.at("verdict"), kAllVerdicts, "verdict");
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from_json(r.domain, w));
  r.pairs_checked = j.at("pairs_checked").get<std::uint64_t>();
  r.pairs_skipped = j.at("pairs_skipped").get<std::uint64_t>();
  return r;
}

Json to_json(const ConsistencyFlag& f) {
  return Json{{"relation", f.relation}, {"status", enum_json(f.status)}, {"detail", f.detail}};
}

static ConsistencyFlag flag_from_json_impl(const Json& j) {
  return ConsistencyFlag{j.at("relation").get<std::string>(),
                         enum_from_json(j.at("status"), kAllConsistency, "consistency status"),
                         j.at("detail").get<std::string>()};
}

Json to_json(const MatrixReport& m) {
  Json flags = Json::array();
  for (const auto& f : m.flags) flags.push_back(to_json(f));
  // Verdict summary up front, full reports under "reports".
  return Json{{"euclidean", enum_json(m.euclidean.verdict)},
              {"strongly", enum_json(m.strongly.verdict)},
              {"ultra", enum_json(m.ultra.verdict)},
              {"uniquely", enum_json(m.uniquely.verdict)},
              {"flags", flags},
              {"has_contradiction", m.has_contradiction()},
              {"reports",
               Json{{"euclidean", to_json(m.euclidean)},
                    {"strongly", to_json(m.strongly)},
                    {"ultra", to_json(m.ultra)},
                    {"uniquely", to_json(m.uniquely)}}}};
}

static MatrixReport matrix_from_json_impl(const Json& j) {
  const Json& r = j.at("reports");
  MatrixReport m{property_report_from_json(r.at("euclidean")), property_report_from_json(r.at("strongly")),
                 property_report_from_json(r.at("ultra")), property_report_from_json(r.at("uniquely")), {}};
  for (const auto& f : j.at("flags")) m.flags.push_back(flag_from_json(f));
  return m;
}

Json to_json(const CertifiedValue& v) {
  return Json{{"value", v.value.value}, {"certainty", enum_json(v.certainty)}, {"reason", enum_json(v.reason)}};
}

static CertifiedValue certified_from_json_impl(const Json& j) {
  return CertifiedValue{Nat(j.at("value").get<std::uint64_t>()),
                        enum_from_json(j.at("certainty"), kAllCertainty, "certainty"),
                        enum_from_json(j.at("reason"), kAllReasons, "refinement reason")};
}

Json to_json(const RefinementTable& t) {
  Json entries = Json::array();
  for (const auto& [a, v] : t.entries) {
    Json e = to_json(v);
    e["element"] = to_json(a);
    entries.push_back(e);
  }
  return Json{{"domain", to_json(t.domain)}, {"window", t.window.bound}, {"entries", entries}, {"all_exact", t.all_exact}};
}

static RefinementTable refinement_table_from_json_impl(const Json& j) {
  RefinementTable t;
  t.domain = domain_from_json(j.at("domain"));
  t.window = Window{j.at("window").get<std::int64_t>()};
  for (const auto& e : j.at("entries")) t.entries.emplace_back(element_from_json(t.domain, e.at("element")), certified_from_json(e));
  t.all_exact = j.at("all_exact").get<bool>();
  return t;
}

Json to_json(const RefinementReport& r) {
  return Json{{"table", to_json(r.table)},
              {"strongly", to_json(r.strongly)},
              {"ultra", to_json(r.ultra)},
              {"fixed_point", to_json(r.fixed_point)},
              {"f_strongly", to_json(r.f_strongly)},
              {"fixed_point_flag", to_json(r.fixed_point_flag)}};
}

static RefinementReport refinement_report_from_json_impl(const Json& j) {
  return RefinementReport{refinement_table_from_json(j.at("table")),
                          property_report_from_json(j.at("strongly")),
                          property_report_from_json(j.at("ultra")),
                          property_report_from_json(j.at("fixed_point")),
                          property_report_from_json(j.at("f_strongly")),
                          flag_from_json(j.at("fixed_point_flag"))};
}

Json to_json(const Decomposition& d) {
  return Json{{"base", to_json(d.base)}, {"coefficients", elements(d.coefficients)}};
}

static Decomposition decomposition_from_json_impl(const DomainSpec& d, const Json& j) {
  return Decomposition{element_from_json(d, j.at("base")), elements_from(d, j.at("coefficients"))};
}

Json to_json(const CandidateRecord& r) {
  return Json{{"index", r.index},
              {"function", to_json(r.fn)},
              {"stage", enum_json(r.stage)},
              {"euclidean", enum_json(r.euclidean)},
              {"ultra", optional_json(r.ultra)},
              {"strongly", optional_json(r.strongly)},
              {"refinement_strongly", optional_json(r.refinement_strongly)},
              {"refinement_ultra", optional_json(r.refinement_ultra)},
              {"refinement_exact", r.refinement_exact ? Json(*r.refinement_exact) : Json(nullptr)},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}};
}

static CandidateRecord record_from_json_impl(const DomainSpec& d, const Json& j) {
  CandidateRecord r;
  r.index = j.at("index").get<std::uint64_t>();
  r.fn = fn_from_json(d, j.at("function"));
  r.stage = enum_from_json(j.at("stage"), kAllStages, "stage");
  r.euclidean = enum_from_json(j.at("euclidean"), kAllVerdicts, "verdict");
  auto verdict = [&](const char* key) -> std::optional<Verdict> {
    if (j.at(key).is_null()) return std::nullopt;
    return enum_from_json(j.at(key), kAllVerdicts, "verdict");
  };
  r.ultra = verdict("ultra");
  r.strongly = verdict("strongly");
  r.refinement_strongly = verdict("refinement_strongly");
  r.refinement_ultra = verdict("refinement_ultra");
  if (!j.at("refinement_exact").is_null()) r.refinement_exact = j.at("refinement_exact").get<bool>();
  if (!j.at("witness").is_null()) r.witness = witness_from_json(d, j.at("witness"));
  return r;
}

Json to_json(const SearchReport& r, bool include_timing) {
  Json stage2 = Json::array();
  for (const auto& rec : r.stage2) stage2.push_back(to_json(rec));
  Json candidates = Json::array();
  for (const auto& rec : r.candidates) candidates.push_back(to_json(rec));
  Json j{{"domain", to_json(r.domain)},
         {"window", r.window.bound},
         {"functions_examined", r.functions_examined},
         {"rejected_euclidean", r.rejected_euclidean},
         {"rejected_ultra", r.rejected_ultra},
         {"rejected_strongly", r.rejected_strongly},
         {"stage2", stage2},
         {"candidates", candidates}};
  if (include_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

static SearchReport search_from_json_impl(const Json& j) {
  SearchReport r;
  r.domain = domain_from_json(j.at("domain"));
  r.window = Window{j.at("window").get<std::int64_t>()};
  r.functions_examined = j.at("functions_examined").get<std::uint64_t>();
  r.rejected_euclidean = j.at("rejected_euclidean").get<std::uint64_t>();
  r.rejected_ultra = j.at("rejected_ultra").get<std::uint64_t>();
  r.rejected_strongly = j.at("rejected_strongly").get<std::uint64_t>();
  for (const auto& rec : j.at("stage2")) r.stage2.push_back(record_from_json(r.domain, rec));
  for (const auto& rec : j.at("candidates")) r.candidates.push_back(record_from_json(r.domain, rec));
  if (j.contains("elapsed_ms")) r.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<std::int64_t>());
  return r;
}

Json to_json(const Report& r) {
  Json j{{"schema", kReportSchema}, {"command", r.command}, {"args", r.args}, {"result", r.result}};
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

static Report report_from_json_impl(const Json& j) {
  const std::string schema = j.at("schema").get<std::string>();
  if (schema != kReportSchema) throw Error(ErrorCode::ParseError, "unsupported report schema '" + schema + "'");
  Report r;
  r.command = j.at("command").get<std::string>();
  r.args = j.at("args");
  r.result = j.at("result");
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

DomainSpec domain_from_json(const Json& j) {
  return guarded([&] { return domain_from_json_impl(j); });
}

Element element_from_json(const DomainSpec& d, const Json& j) {
  return guarded([&] { return element_from_json_impl(d, j); });
}

EuclideanFnSpec fn_from_json(const DomainSpec& d, const Json& j) {
  return guarded([&] { return fn_from_json_impl(d, j); });
}

CandidateDivision division_from_json(const DomainSpec& d, const Json& j) {
  return guarded([&] { return division_from_json_impl(d, j); });
}

EnumerationResult enumeration_from_json(const DomainSpec& d, const Json& j) {
  return guarded([&] { return enumeration_from_json_impl(d, j); });
}

Witness witness_from_json(const DomainSpec& d, const Json& j) {
  return guarded([&] { return witness_from_json_impl(d, j); });
}

PropertyReport property_report_from_json(const Json& j) {
  return guarded([&] { return property_report_from_json_impl(j); });
}

ConsistencyFlag flag_from_json(const Json& j) {
  return guarded([&] { return flag_from_json_impl(j); });
}

MatrixReport matrix_from_json(const Json& j) {
  return guarded([&] { return matrix_from_json_impl(j); });
}

CertifiedValue certified_from_json(const Json& j) {
  return guarded([&] { return certified_from_json_impl(j); });
}

RefinementTable refinement_table_from_json(const Json& j) {
  return guarded([&] { return refinement_table_from_json_impl(j); });
}

RefinementReport refinement_report_from_json(const Json& j) {
  return guarded([&] { return refinement_report_from_json_impl(j); });
}

Decomposition decomposition_from_json(const DomainSpec& d, const Json& j) {
  return guarded([&] { return decomposition_from_json_impl(d, j); });
}

CandidateRecord record_from_json(const DomainSpec& d, const Json& j) {
  return guarded([&] { return record_from_json_impl(d, j); });
}

SearchReport search_from_json(const Json& j) {
  return guarded([&] { return search_from_json_impl(j); });
}

Report report_from_json(const Json& j) {
  return guarded([&] { return report_from_json_impl(j); });
}

}  // namespace euclid
