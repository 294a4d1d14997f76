#include <doctest.h>

#include <cstdlib>
#include <random>

#include "euclid/enumerate.hpp"
#include "euclid/refinement.hpp"
#include "support.hpp"

using namespace euclid;
using testing::el;
using testing::error_of;
using testing::Z;

namespace {

/// Oracle: min f(ab) over the nonzero b of a window large enough to contain the minimizer.
Nat brute_refine(const EuclideanFnSpec& f, const Element& a, const Window& w) {
  std::optional<Nat> best;
  for (const auto& b : enumerate_nonzero(a.domain(), w)) {
    const Nat v = eval_f(f, a * b);
    if (!best || v < *best) best = v;
  }
  return *best;
}

}  // namespace

TEST_CASE("finite fields refine to the minimum of the table") {
  const auto F4 = DomainSpec::finite_field(4);
  const auto f = EuclideanFnSpec::field_table(4, {{1, Nat(0)}, {2, Nat(1)}, {3, Nat(1)}});
  const auto table = refine_function(f, F4, Window::whole());
  CHECK(table.all_exact);
  REQUIRE(table.entries.size() == 3);
  for (const auto& [a, v] : table.entries) {
    CHECK(v.value == Nat(0));
    CHECK(v.reason == RefineReason::ClosedFormField);
  }

  const auto report = check_refinement_properties(f, F4, Window::whole());
  CHECK(report.strongly.verdict == Verdict::ExhaustivelyVerified);
  CHECK(report.ultra.verdict == Verdict::ExhaustivelyVerified);
  CHECK(report.fixed_point.violated());
  CHECK(report.f_strongly.violated());
  CHECK(report.fixed_point_flag.status == Consistency::Consistent);
}

TEST_CASE("strongly Euclidean built-ins are fixed points") {
  const std::vector<std::tuple<EuclideanFnSpec, DomainSpec, Window>> cases = {
      {EuclideanFnSpec::abs_value(), DomainSpec::integers(), Window::magnitude(10)},
      {EuclideanFnSpec::degree(), DomainSpec::poly(2), Window::degree(3)},
      {EuclideanFnSpec::quad_norm(), DomainSpec::quadratic(-1), Window::magnitude(4)},
      {EuclideanFnSpec::phi_deg({Nat(1), Nat(3), Nat(4), Nat(9)}), DomainSpec::poly(3), Window::degree(2)},
  };
  for (const auto& [f, d, w] : cases) {
    CAPTURE(describe(f));
    const auto report = check_refinement_properties(f, d, w);
    for (const auto& [a, v] : report.table.entries) {
      CHECK(v.reason == RefineReason::FixedPointStrong);
      CHECK(v.value == eval_f(f, a));
    }
    CHECK(report.fixed_point.holds_on_window());
    CHECK(report.f_strongly.holds_on_window());
    CHECK(report.fixed_point_flag.status == Consistency::Consistent);
  }
}

TEST_CASE("integer exception tables: f(3) = f(-3) = 9 refines to 6") {
  const auto f = EuclideanFnSpec::with_exceptions(EuclideanFnSpec::abs_value(), {{Z(3), Nat(9)}, {Z(-3), Nat(9)}});
  const auto v = refine_eval(f, Z(3));
  CHECK(v.value == Nat(6));
  CHECK(v.exact());
  CHECK(v.reason == RefineReason::MonotoneBound);
  CHECK(refine_eval(f, Z(5)).value == Nat(5));
  CHECK(refine_eval(f, Z(-1)).value == Nat(1));
  CHECK(error_of([&] { (void)refine_eval(f, Z(0)); }) == ErrorCode::EvalAtZero);
}

TEST_CASE("MonotoneBound agrees with brute force") {
  SUBCASE("integers") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<std::pair<Element, Nat>> exc;
      const int n = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < n; ++i) {
        const long long x = 1 + rng() % 8;
        const Element e = Z(rng() % 2 ? x : -x);
        if (std::any_of(exc.begin(), exc.end(), [&](const auto& p) { return p.first == e; })) continue;
        exc.emplace_back(e, Nat(rng() % 20));
      }
      const auto f = EuclideanFnSpec::with_exceptions(EuclideanFnSpec::abs_value(), exc);
      CAPTURE(describe(f));
      // Values are below 20, so multiples beyond |ab| = 20 never win.
      for (long long a = -9; a <= 9; ++a) {
        if (a == 0) continue;
        const auto v = refine_eval(f, Z(a));
        CHECK(v.exact());
        CHECK(v.value == brute_refine(f, Z(a), Window::magnitude(20)));
        CHECK(v.value <= eval_f(f, Z(a)));
      }
    }
  }
  SUBCASE("polynomials over F2") {
    const auto P = DomainSpec::poly(2);
    const auto f = EuclideanFnSpec::with_exceptions(
        EuclideanFnSpec::degree(), {{el(P, "x"), Nat(5)}, {el(P, "x^2+x"), Nat(0)}, {el(P, "x^3+1"), Nat(1)}});
    for (const auto& a : enumerate_nonzero(P, Window::degree(3))) {
      CAPTURE(render(a));
      const auto v = refine_eval(f, a);
      CHECK(v.exact());
      CHECK(v.value == brute_refine(f, a, Window::degree(5)));
    }
  }
  SUBCASE("Gaussian integers") {
    const auto G = DomainSpec::quadratic(-1);
    const auto f = EuclideanFnSpec::with_exceptions(EuclideanFnSpec::quad_norm(),
                                                    {{el(G, "1+i"), Nat(7)}, {el(G, "2"), Nat(1)}});
    for (const auto& a : enumerate_nonzero(G, Window::magnitude(4))) {
      CAPTURE(render(a));
      const auto v = refine_eval(f, a);
      CHECK(v.exact());
      CHECK(v.value == brute_refine(f, a, Window::magnitude(8)));
    }
  }
}

TEST_CASE("bounded search and window requirements") {
  const auto R = DomainSpec::quadratic(2);
  const auto f = EuclideanFnSpec::with_exceptions(EuclideanFnSpec::quad_norm(), {{el(R, "3"), Nat(1)}});
  CHECK(error_of([&] { (void)refine_eval(f, el(R, "3")); }) == ErrorCode::WindowRequired);
  const auto v = refine_eval(f, el(R, "3"), RefineStrategy::automatic(Window::magnitude(6)));
  CHECK(!v.exact());
  CHECK(v.reason == RefineReason::BoundedSearch);
  CHECK(v.value == Nat(1));

  const auto forced = refine_eval(EuclideanFnSpec::abs_value(), Z(4), RefineStrategy::search(Window::magnitude(5)));
  CHECK(forced.certainty == Certainty::UpperBound);
  CHECK(forced.value == Nat(4));

  const auto table = refine_function(f, R, Window::magnitude(3), RefineStrategy::automatic(Window::magnitude(4)));
  CHECK(!table.all_exact);
}

TEST_CASE("the refinement is strongly Euclidean and never exceeds f") {
  const auto f = EuclideanFnSpec::with_exceptions(EuclideanFnSpec::abs_value(),
                                                  {{Z(2), Nat(7)}, {Z(-4), Nat(1)}, {Z(6), Nat(2)}});
  const auto report = check_refinement_properties(f, DomainSpec::integers(), Window::magnitude(12));
  CHECK(report.table.all_exact);
  CHECK(report.strongly.holds_on_window());
  CHECK(report.strongly.pairs_skipped == 0);
  for (const auto& [a, v] : report.table.entries) CHECK(v.value <= eval_f(f, a));
  CHECK(report.fixed_point.violated());
}

TEST_CASE("Refiner memoizes and is deterministic across thread counts") {
  const auto f = EuclideanFnSpec::with_exceptions(EuclideanFnSpec::abs_value(), {{Z(3), Nat(9)}, {Z(-3), Nat(9)}});
  const Refiner r(f, RefineStrategy::automatic());
  CHECK(r(Z(3)) == r(Z(3)));
  CHECK(r.exact(Z(3)) == Nat(6));

  setenv("EUCLID_LAB_THREADS", "1", 1);
  const auto one = refine_function(f, DomainSpec::integers(), Window::magnitude(30));
  setenv("EUCLID_LAB_THREADS", "4", 1);
  const auto many = refine_function(f, DomainSpec::integers(), Window::magnitude(30));
  unsetenv("EUCLID_LAB_THREADS");
  CHECK(one == many);
}

TEST_CASE("string forms") {
  for (auto c : {Certainty::Exact, Certainty::UpperBound}) CHECK(certainty_from_string(to_string(c)) == c);
  for (auto r : {RefineReason::ClosedFormField, RefineReason::FixedPointStrong, RefineReason::MonotoneBound,
                 RefineReason::BoundedSearch})
    CHECK(reason_from_string(to_string(r)) == r);
  CHECK(!reason_from_string("Guess"));
}
