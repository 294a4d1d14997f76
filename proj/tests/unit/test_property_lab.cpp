#include <doctest.h>

#include <cstdlib>

#include "euclid/enumerate.hpp"
#include "euclid/property_lab.hpp"
#include "support.hpp"

using namespace euclid;
using testing::el;
using testing::error_of;
using testing::Z;

namespace {

EuclideanFnSpec f4_table() {
  return EuclideanFnSpec::field_table(4, {{1, Nat(0)}, {2, Nat(1)}, {3, Nat(1)}});
}

/// Oracle: strongly Euclidean by brute force over the window.
bool strongly_oracle(const EuclideanFnSpec& f, const DomainSpec& d, const Window& w) {
  const auto xs = enumerate_nonzero(d, w);
  for (const auto& a : xs)
    for (const auto& b : xs)
      if (eval_f(f, a) > eval_f(f, a * b)) return false;
  return true;
}

bool ultra_oracle(const EuclideanFnSpec& f, const DomainSpec& d, const Window& w) {
  const auto xs = enumerate_nonzero(d, w);
  for (const auto& a : xs)
    for (const auto& b : xs) {
      const Element s = a + b;
      if (!s.is_zero() && eval_f(f, s) > std::max(eval_f(f, a), eval_f(f, b))) return false;
    }
  return true;
}

class ThreadsGuard {
 public:
  explicit ThreadsGuard(const char* n) { setenv("EUCLID_LAB_THREADS", n, 1); }
  ~ThreadsGuard() { unsetenv("EUCLID_LAB_THREADS"); }
};

}  // namespace

TEST_CASE("the F4 table f(1)=0, f(a)=f(b)=1") {
  const auto F4 = DomainSpec::finite_field(4);
  const auto f = f4_table();
  const auto w = Window::whole();

  const auto euclid = check_property(Property::Euclidean, f, F4, w);
  CHECK(euclid.verdict == Verdict::ExhaustivelyVerified);

  const auto ultra = check_property(Property::UltraEuclidean, f, F4, w);
  CHECK(ultra.verdict == Verdict::ExhaustivelyVerified);
  CHECK(ultra.pairs_skipped == 0);

  const auto strongly = check_property(Property::StronglyEuclidean, f, F4, w);
  REQUIRE(strongly.verdict == Verdict::Violated);
  CHECK(testing::rendered(strongly.witnesses.front().elements) == std::vector<std::string>{"a", "b", "1"});
  CHECK(strongly.witnesses.front().values == std::vector<Nat>{Nat(1), Nat(0)});
  CHECK(replay_witness(strongly));

  const auto uniquely = check_property(Property::UniquelyEuclidean, f, F4, w);
  REQUIRE(uniquely.verdict == Verdict::Violated);
  const auto& divs = uniquely.witnesses.front().divisions;
  CHECK(divs.size() >= 2);
  CHECK(replay_witness(uniquely));

  const auto m = theorem_matrix(f, F4, w);
  CHECK(!m.has_contradiction());
  REQUIRE(m.flags.size() == 4);
  for (const auto& flag : m.flags) CHECK(flag.status == Consistency::Consistent);
}

TEST_CASE("the integers under the absolute value") {
  const auto D = DomainSpec::integers();
  const auto f = EuclideanFnSpec::abs_value();
  const auto w = Window::magnitude(15);

  CHECK(check_property(Property::Euclidean, f, D, w).verdict == Verdict::NoViolationFound);
  CHECK(check_property(Property::StronglyEuclidean, f, D, w).verdict == Verdict::NoViolationFound);

  const auto ultra = check_property(Property::UltraEuclidean, f, D, w);
  REQUIRE(ultra.violated());
  CHECK(testing::rendered(ultra.witnesses.front().elements) == std::vector<std::string>{"1", "1", "2"});
  CHECK(replay_witness(ultra));

  const auto uniquely = check_property(Property::UniquelyEuclidean, f, D, w);
  REQUIRE(uniquely.violated());
  CHECK(uniquely.witnesses.front().divisions.size() == 2);
  CHECK(replay_witness(uniquely));

  const auto m = theorem_matrix(f, D, w);
  CHECK(!m.has_contradiction());
}

TEST_CASE("polynomials under the degree are uniquely Euclidean") {
  const auto P = DomainSpec::poly(2);
  const auto f = EuclideanFnSpec::degree();
  const auto w = Window::degree(4);
  for (Property p : {Property::Euclidean, Property::StronglyEuclidean, Property::UltraEuclidean,
                     Property::UniquelyEuclidean}) {
    CAPTURE(to_string(p));
    const auto r = check_property(p, f, P, w);
    CHECK(r.verdict == Verdict::NoViolationFound);
    CHECK(r.pairs_skipped == 0);
    CHECK(r.pairs_checked > 0);
  }
  CHECK(!theorem_matrix(f, P, Window::degree(3)).has_contradiction());
}

TEST_CASE("truncated power series under the order") {
  const auto S = DomainSpec::series(2, 8);
  const auto f = EuclideanFnSpec::order();
  const auto ultra = check_property(Property::UltraEuclidean, f, S, Window::whole());
  REQUIRE(ultra.violated());
  CHECK(testing::rendered({ultra.witnesses.front().elements[0], ultra.witnesses.front().elements[1]}) ==
        std::vector<std::string>{"1+O(x^8)", "x+1+O(x^8)"});
  CHECK(replay_witness(ultra));

  // Products that vanish modulo x^T are undecidable, so the check cannot be exhaustive.
  const auto strongly = check_property(Property::StronglyEuclidean, f, DomainSpec::series(2, 4), Window::whole());
  CHECK(strongly.verdict == Verdict::NoViolationFound);
  CHECK(strongly.pairs_skipped > 0);
}

TEST_CASE("checks agree with brute-force oracles over prime-field tables") {
  // Every function on F_p is Euclidean (take r = 0); a table is strongly,
  // ultra or uniquely Euclidean exactly when it is constant.
  const auto F3 = DomainSpec::finite_field(3);
  const auto F5 = DomainSpec::finite_field(5);
  for (const auto& [D, q] : {std::pair{F3, 3}, std::pair{F5, 5}}) {
    std::vector<std::uint64_t> values(q - 1, 0);
    for (;;) {
      std::map<FieldElem, Nat> table;
      for (int i = 1; i < q; ++i) table[i] = Nat(values[i - 1]);
      const auto f = EuclideanFnSpec::field_table(q, table);
      const bool constant = std::all_of(values.begin(), values.end(), [&](auto v) { return v == values[0]; });
      CAPTURE(describe(f));
      const auto w = Window::whole();
      CHECK(check_property(Property::Euclidean, f, D, w).verdict == Verdict::ExhaustivelyVerified);
      const auto s = check_property(Property::StronglyEuclidean, f, D, w);
      const auto u = check_property(Property::UltraEuclidean, f, D, w);
      const auto n = check_property(Property::UniquelyEuclidean, f, D, w);
      CHECK(s.holds_on_window() == strongly_oracle(f, D, w));
      CHECK(u.holds_on_window() == ultra_oracle(f, D, w));
      CHECK(s.holds_on_window() == constant);
      CHECK(u.holds_on_window() == constant);
      CHECK(n.holds_on_window() == constant);
      if (constant) CHECK(s.verdict == Verdict::ExhaustivelyVerified);
      std::size_t i = 0;
      while (i < values.size() && ++values[i] == 3) values[i++] = 0;
      if (i == values.size()) break;
    }
  }
}

TEST_CASE("the F4 exhaustive case over all tables with values below 3") {
  const auto F4 = DomainSpec::finite_field(4);
  for (std::uint64_t a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; b < 3; ++b)
      for (std::uint64_t c = 0; c < 3; ++c) {
        const auto f = EuclideanFnSpec::field_table(4, {{1, Nat(a)}, {2, Nat(b)}, {3, Nat(c)}});
        const auto w = Window::whole();
        CHECK(check_property(Property::StronglyEuclidean, f, F4, w).holds_on_window() ==
              strongly_oracle(f, F4, w));
        CHECK(check_property(Property::UltraEuclidean, f, F4, w).holds_on_window() == ultra_oracle(f, F4, w));
        CHECK(!theorem_matrix(f, F4, w).has_contradiction());
      }
}

TEST_CASE("unit lemmas") {
  const auto lemmas = check_unit_lemmas(EuclideanFnSpec::abs_value(), DomainSpec::integers(), Window::magnitude(12));
  CHECK(lemmas.unit_equality.verdict == Verdict::NoViolationFound);
  CHECK(lemmas.min_at_units.verdict == Verdict::NoViolationFound);

  const auto poly = check_unit_lemmas(EuclideanFnSpec::degree(), DomainSpec::poly(3), Window::degree(2));
  CHECK(poly.unit_equality.holds_on_window());
  CHECK(poly.min_at_units.holds_on_window());

  const auto gauss = check_unit_lemmas(EuclideanFnSpec::quad_norm(), DomainSpec::quadratic(-1), Window::magnitude(6));
  CHECK(gauss.unit_equality.holds_on_window());
  CHECK(gauss.min_at_units.holds_on_window());

  const auto f4 = check_unit_lemmas(f4_table(), DomainSpec::finite_field(4), Window::whole());
  CHECK(f4.unit_equality.verdict == Verdict::NotApplicable);
  CHECK(f4.min_at_units.verdict == Verdict::NotApplicable);

  // Raising f at 2 and -2 keeps the minimum at the units.
  const auto bumped =
      EuclideanFnSpec::with_exceptions(EuclideanFnSpec::abs_value(), {{Z(2), Nat(3)}, {Z(-2), Nat(3)}});
  const auto ok = check_unit_lemmas(bumped, DomainSpec::integers(), Window::magnitude(6));
  CHECK(ok.min_at_units.holds_on_window());
}

TEST_CASE("consistency flags") {
  const auto E = Verdict::ExhaustivelyVerified, N = Verdict::NoViolationFound, V = Verdict::Violated;
  auto any = [](const std::vector<ConsistencyFlag>& flags, Consistency c) {
    return std::any_of(flags.begin(), flags.end(), [&](const auto& f) { return f.status == c; });
  };
  CHECK(!any(consistency_flags(E, E, E, E), Consistency::TheoremContradiction));
  CHECK(!any(consistency_flags(E, E, V, V), Consistency::TheoremContradiction));
  CHECK(!any(consistency_flags(N, N, V, V), Consistency::TheoremContradiction));
  // uniquely but not strongly
  CHECK(any(consistency_flags(E, V, E, E), Consistency::TheoremContradiction));
  // strongly and ultra but not uniquely
  CHECK(any(consistency_flags(E, E, E, V), Consistency::TheoremContradiction));
  // the same shape on a window that could not be exhausted is only inconclusive
  const auto flags = consistency_flags(N, N, N, V);
  CHECK(!any(flags, Consistency::TheoremContradiction));
  CHECK(any(flags, Consistency::Inconclusive));
  CHECK(consistency_flags(E, E, E, E).size() == 4);
}

TEST_CASE("replay_witness rejects tampered or non-violated reports") {
  const auto D = DomainSpec::integers();
  auto ultra = check_property(Property::UltraEuclidean, EuclideanFnSpec::abs_value(), D, Window::magnitude(5));
  REQUIRE(ultra.violated());
  auto tampered = ultra;
  tampered.witnesses.front().elements = {Z(2), Z(-1), Z(1)};
  CHECK(!replay_witness(tampered));
  tampered = ultra;
  tampered.witnesses.front().values = {Nat(7), Nat(7), Nat(7)};
  CHECK(!replay_witness(tampered));
  const auto ok = check_property(Property::StronglyEuclidean, EuclideanFnSpec::abs_value(), D, Window::magnitude(5));
  CHECK(!replay_witness(ok));
}

TEST_CASE("collect_all and determinism across thread counts") {
  const auto D = DomainSpec::integers();
  const auto f = EuclideanFnSpec::abs_value();
  const auto w = Window::magnitude(20);
  PropertyReport one, many;
  {
    ThreadsGuard g("1");
    one = check_property(Property::UniquelyEuclidean, f, D, w, {.collect_all = true});
  }
  {
    ThreadsGuard g("4");
    many = check_property(Property::UniquelyEuclidean, f, D, w, {.collect_all = true});
  }
  CHECK(one == many);
  CHECK(one.witnesses.size() > 1);
  for (const auto& wit : one.witnesses) {
    PropertyReport single = one;
    single.witnesses = {wit};
    CHECK(replay_witness(single));
  }

  const auto first = check_property(Property::UniquelyEuclidean, f, D, w);
  CHECK(first.witnesses.size() == 1);
  CHECK(first.witnesses.front() == one.witnesses.front());

  ThreadsGuard g("3");
  CHECK(theorem_matrix(EuclideanFnSpec::degree(), DomainSpec::poly(2), Window::degree(3)).flags ==
        theorem_matrix(EuclideanFnSpec::degree(), DomainSpec::poly(2), Window::degree(3)).flags);
}

TEST_CASE("valuation-based checks and unsupported properties") {
  const auto D = DomainSpec::integers();
  const Valuation abs = [](const Element& a) -> std::optional<Nat> { return eval_f(EuclideanFnSpec::abs_value(), a); };
  CHECK(check_strongly(abs, D, Window::magnitude(8)).verdict == Verdict::NoViolationFound);
  CHECK(check_ultra(abs, D, Window::magnitude(8)).violated());
  const Valuation none = [](const Element&) -> std::optional<Nat> { return std::nullopt; };
  const auto skipped = check_ultra(none, D, Window::magnitude(4));
  CHECK(skipped.pairs_checked == 0);
  CHECK(skipped.pairs_skipped > 0);

  CHECK(error_of([&] {
          (void)check_property(Property::UnitEquality, EuclideanFnSpec::abs_value(), D, Window::magnitude(3));
        }) == ErrorCode::InvalidFunction);
  CHECK(error_of([&] {
          (void)check_property(Property::Euclidean, EuclideanFnSpec::degree(), D, Window::magnitude(3));
        }) == ErrorCode::IncompatibleFunction);
}
