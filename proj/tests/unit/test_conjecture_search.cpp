#include <doctest.h>

#include <cstdlib>
#include <set>

#include "euclid/conjecture_search.hpp"
#include "support.hpp"

using namespace euclid;
using testing::el;
using testing::error_of;
using testing::Z;

namespace {

/// f(1) = 0 and f(p) = deg p + 1 otherwise, on F4[x] up to degree `max_degree`.
EuclideanFnSpec f4x_example(std::uint64_t max_degree) {
  std::vector<Nat> phi;
  for (std::uint64_t d = 0; d <= max_degree; ++d) phi.emplace_back(d + 1);
  return EuclideanFnSpec::with_exceptions(EuclideanFnSpec::phi_deg(phi),
                                          {{Element::poly(4, {1}), Nat(0)}});
}

}  // namespace

TEST_CASE("family sizes and determinism") {
  const FamilySpec f4{DomainSpec::finite_field(4), AllFieldTables{1}};
  const auto fns = enumerate_family(f4);
  CHECK(fns.size() == 8);
  CHECK(enumerate_family(f4) == fns);
  std::set<std::string> seen;
  for (const auto& f : fns) seen.insert(describe(f));
  CHECK(seen.size() == 8);

  CHECK(enumerate_family({DomainSpec::finite_field(5), AllFieldTables{3}}).size() == 256);
  CHECK(enumerate_family({DomainSpec::finite_field(5), AllFieldTables{3}, 100}).size() == 100);
  CHECK(error_of([] { (void)enumerate_family({DomainSpec::finite_field(5), AllFieldTables{3}, 0}); }) ==
        ErrorCode::BudgetZero);
  CHECK(error_of([] { (void)enumerate_family({DomainSpec::integers(), AllFieldTables{3}}); }) ==
        ErrorCode::InvalidDomain);
  CHECK(error_of([] { (void)enumerate_family({DomainSpec::integers(), PhiDegPerturbations{}}); }) ==
        ErrorCode::InvalidDomain);
}

TEST_CASE("perturbation families") {
  // |.| on Z with one point of [-2, 2] \ {0} moved to a different value in 0..3.
  const auto ints = enumerate_family({DomainSpec::integers(), IntegerPerturbations{2, 3, 1}});
  CHECK(ints.size() == 4 * 3);
  for (const auto& f : ints) {
    CHECK(f.kind == FnKind::ExceptionTable);
    CHECK(f.exceptions.size() == 1);
    CHECK(!validate_fspec(f));
  }

  const auto phis = enumerate_family({DomainSpec::poly(2), PhiDegPerturbations{2, 3, 1, 0}});
  CHECK(!phis.empty());
  for (const auto& f : phis) {
    CHECK(!validate_fspec(f));
    CHECK(compatible(f, DomainSpec::poly(2)));
    CHECK(f.exceptions.size() == 1);
  }
  CHECK(enumerate_family({DomainSpec::poly(2), PhiDegPerturbations{2, 3, 1, 0}}) == phis);
}

TEST_CASE("controls are classified as expected") {
  CandidateRecord rec;
  auto report = verify_candidate(EuclideanFnSpec::abs_value(), DomainSpec::integers(), Window::magnitude(10), &rec);
  CHECK(rec.stage == Stage::NotUltra);
  REQUIRE(rec.witness);
  CHECK(testing::rendered({rec.witness->elements[0], rec.witness->elements[1]}) ==
        std::vector<std::string>{"1", "1"});
  CHECK(report.rejected_ultra == 1);
  CHECK(report.candidates.empty());

  const auto P = DomainSpec::poly(2);
  report = verify_candidate(EuclideanFnSpec::degree(), P, Window::degree(4), &rec);
  CHECK(rec.stage == Stage::Strongly);
  CHECK(report.rejected_strongly == 1);

  const auto table = EuclideanFnSpec::field_table(4, {{1, Nat(0)}, {2, Nat(1)}, {3, Nat(1)}});
  report = verify_candidate(table, DomainSpec::finite_field(4), Window::whole(), &rec);
  CHECK(rec.stage == Stage::RefinementUltra);
  CHECK(rec.ultra == Verdict::ExhaustivelyVerified);
  CHECK(rec.strongly == Verdict::Violated);
  CHECK(rec.refinement_ultra == Verdict::ExhaustivelyVerified);
  CHECK(rec.refinement_exact == true);
  CHECK(report.stage2.size() == 1);
  CHECK(report.candidates.empty());

  // The F4[x] example: ultra but not strongly; its refinement stays ultra.
  const auto F4x = DomainSpec::poly(4);
  report = verify_candidate(f4x_example(6), F4x, Window::degree(2), &rec);
  CHECK(rec.ultra == Verdict::NoViolationFound);
  CHECK(rec.strongly == Verdict::Violated);
  CHECK(rec.stage == Stage::RefinementUltra);
  CHECK(report.candidates.empty());
}

TEST_CASE("field searches find no survivors") {
  const auto f4 = run_search({DomainSpec::finite_field(4), AllFieldTables{1}}, Window::whole());
  CHECK(f4.functions_examined == 8);
  CHECK(f4.candidates.empty());
  CHECK(f4.rejected_euclidean == 0);
  CHECK(f4.rejected_ultra + f4.rejected_strongly + f4.stage2.size() == 8);
  for (const auto& r : f4.stage2) {
    CHECK(r.stage == Stage::RefinementUltra);
    CHECK(r.refinement_exact == true);
  }

  const auto f5 = run_search({DomainSpec::finite_field(5), AllFieldTables{3}}, Window::whole());
  CHECK(f5.functions_examined == 256);
  CHECK(f5.candidates.empty());
  // Only constants are ultra on a prime field, and those are strongly Euclidean.
  CHECK(f5.rejected_strongly == 4);
  CHECK(f5.rejected_ultra == 252);
}

TEST_CASE("search results do not depend on the thread count") {
  const FamilySpec family{DomainSpec::poly(2), PhiDegPerturbations{2, 3, 1, 0}};
  setenv("EUCLID_LAB_THREADS", "1", 1);
  const auto one = run_search(family, Window::degree(2));
  setenv("EUCLID_LAB_THREADS", "4", 1);
  const auto many = run_search(family, Window::degree(2));
  unsetenv("EUCLID_LAB_THREADS");
  CHECK(one == many);
  CHECK(one.functions_examined == enumerate_family(family).size());
  for (std::size_t i = 1; i < one.stage2.size(); ++i) CHECK(one.stage2[i - 1].index < one.stage2[i].index);
}

TEST_CASE("stage names") {
  for (auto s : {Stage::NotEuclidean, Stage::NotUltra, Stage::Strongly, Stage::RefinementUltra, Stage::Survivor})
    CHECK(stage_from_string(to_string(s)) == s);
}
