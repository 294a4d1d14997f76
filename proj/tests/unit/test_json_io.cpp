#include <doctest.h>

#include "euclid/conjecture_search.hpp"
#include "euclid/decomposition.hpp"
#include "euclid/enumerate.hpp"
#include "euclid/json_io.hpp"
#include "euclid/property_lab.hpp"
#include "euclid/refinement.hpp"
#include "support.hpp"

using namespace euclid;
using testing::el;
using testing::error_of;
using testing::Z;

namespace {

/// Serializes, reparses from text and serializes again.
template <class T, class Read>
T through_text(const T& value, Read read) {
  const Json j = Json::parse(dump(to_json(value)));
  return read(j);
}

std::vector<DomainSpec> domains() {
  return {DomainSpec::integers(), DomainSpec::quadratic(-3), DomainSpec::quadratic(3),
          DomainSpec::finite_field(4), DomainSpec::poly(3), DomainSpec::series(2, 6)};
}

}  // namespace

TEST_CASE("snake_case") {
  CHECK(snake_case("NoViolationFound") == "no_violation_found");
  CHECK(snake_case("Exact") == "exact");
  CHECK(snake_case("UpperBound") == "upper_bound");
}

TEST_CASE("domains and elements round-trip") {
  for (const auto& d : domains()) {
    CAPTURE(describe(d));
    CHECK(through_text(d, domain_from_json) == d);
    const Window w = d.kind == DomainKind::PolyRing   ? Window::degree(2)
                     : d.kind == DomainKind::Integers ? Window::magnitude(5)
                     : d.kind == DomainKind::QuadraticRing ? Window::magnitude(3)
                                                           : Window::whole();
    auto xs = enumerate_nonzero(d, w);
    if (xs.size() > 200) xs.erase(xs.begin() + 200, xs.end());
    xs.push_back(Element::zero(d));
    for (const auto& a : xs) CHECK(element_from_json(d, Json::parse(dump(to_json(a)))) == a);
  }
  CHECK(error_of([] { (void)domain_from_json(Json{{"kind", "ring"}}); }) == ErrorCode::ParseError);
  CHECK(error_of([] { (void)element_from_json(DomainSpec::integers(), Json(3)); }) == ErrorCode::ParseError);
}

TEST_CASE("function specs round-trip") {
  const auto P = DomainSpec::poly(2);
  const std::vector<std::pair<EuclideanFnSpec, DomainSpec>> fns = {
      {EuclideanFnSpec::abs_value(), DomainSpec::integers()},
      {EuclideanFnSpec::degree(), P},
      {EuclideanFnSpec::order(), DomainSpec::series(3, 4)},
      {EuclideanFnSpec::quad_norm(), DomainSpec::quadratic(-1)},
      {EuclideanFnSpec::phi_deg({Nat(0), Nat(4), Nat(5)}), P},
      {EuclideanFnSpec::field_table(4, {{1, Nat(0)}, {2, Nat(1)}, {3, Nat(1)}}), DomainSpec::finite_field(4)},
      {EuclideanFnSpec::with_exceptions(EuclideanFnSpec::degree(), {{el(P, "x+1"), Nat(0)}, {el(P, "1"), Nat(3)}}), P},
  };
  for (const auto& [f, d] : fns) {
    CAPTURE(describe(f));
    CHECK(fn_from_json(d, Json::parse(dump(to_json(f)))) == f);
    CHECK(fn_kind_from_name(fn_kind_name(f.kind)) == f.kind);
  }
  CHECK(!fn_kind_from_name("weird"));
}

TEST_CASE("enumerations and property reports round-trip") {
  const auto res = enumerate_valid_divisions(EuclideanFnSpec::abs_value(), Z(1), Z(2));
  const auto back = enumeration_from_json(DomainSpec::integers(), Json::parse(dump(to_json(res))));
  CHECK(back.complete == res.complete);
  CHECK(back.divisions == res.divisions);

  const auto F4 = DomainSpec::finite_field(4);
  const auto table = EuclideanFnSpec::field_table(4, {{1, Nat(0)}, {2, Nat(1)}, {3, Nat(1)}});
  for (Property p : {Property::Euclidean, Property::StronglyEuclidean, Property::UltraEuclidean,
                     Property::UniquelyEuclidean}) {
    const auto r = check_property(p, table, F4, Window::whole(), {.collect_all = true});
    CHECK(through_text(r, property_report_from_json) == r);
  }
  const auto z = check_property(Property::UltraEuclidean, EuclideanFnSpec::abs_value(), DomainSpec::integers(),
                                Window::magnitude(4));
  const Json j = to_json(z);
  CHECK(j.at("verdict") == "violated");
  CHECK(j.at("property") == "ultra_euclidean");
  CHECK(through_text(z, property_report_from_json) == z);

  const auto m = theorem_matrix(table, F4, Window::whole());
  const auto mb = matrix_from_json(Json::parse(dump(to_json(m))));
  CHECK(mb.euclidean == m.euclidean);
  CHECK(mb.strongly == m.strongly);
  CHECK(mb.ultra == m.ultra);
  CHECK(mb.uniquely == m.uniquely);
  CHECK(mb.flags == m.flags);
}

TEST_CASE("refinement, decomposition and search reports round-trip") {
  const auto f = EuclideanFnSpec::with_exceptions(EuclideanFnSpec::abs_value(), {{Z(3), Nat(9)}, {Z(-3), Nat(9)}});
  const auto rr = check_refinement_properties(f, DomainSpec::integers(), Window::magnitude(6));
  const auto rb = refinement_report_from_json(Json::parse(dump(to_json(rr))));
  CHECK(rb.table == rr.table);
  CHECK(rb.strongly == rr.strongly);
  CHECK(rb.ultra == rr.ultra);
  CHECK(rb.fixed_point == rr.fixed_point);
  CHECK(rb.f_strongly == rr.f_strongly);
  CHECK(rb.fixed_point_flag == rr.fixed_point_flag);
  const CertifiedValue v{Nat(6), Certainty::UpperBound, RefineReason::BoundedSearch};
  CHECK(through_text(v, certified_from_json) == v);

  const auto P = DomainSpec::poly(2);
  const auto dec = decompose_by(EuclideanFnSpec::degree(), el(P, "x^3+x+1"), el(P, "x+1"));
  CHECK(decomposition_from_json(P, Json::parse(dump(to_json(dec)))) == dec);

  const auto search = run_search({DomainSpec::finite_field(4), AllFieldTables{1}}, Window::whole());
  CHECK(through_text(search, search_from_json) == search);
  CHECK(!to_json(search).contains("elapsed_ms"));
  CHECK(to_json(search, true).contains("elapsed_ms"));
  for (const auto& r : search.stage2)
    CHECK(record_from_json(search.domain, Json::parse(dump(to_json(r)))) == r);
}

TEST_CASE("top-level reports") {
  Report r{"check", Json{{"domain", "Z"}}, Json{{"verdict", "violated"}}, std::nullopt};
  const Json j = to_json(r);
  CHECK(j.at("schema") == kReportSchema);
  CHECK(!j.contains("timing_ms"));
  CHECK(report_from_json(Json::parse(dump(j))) == r);
  r.timing_ms = 1.5;
  CHECK(report_from_json(to_json(r)) == r);

  Json wrong = j;
  wrong["schema"] = "something-else/9";
  CHECK(error_of([&] { (void)report_from_json(wrong); }) == ErrorCode::ParseError);

  const std::string text = dump(j);
  CHECK(text.back() == '\n');
  CHECK(text.find("\"command\"") < text.find("\"result\""));
}
