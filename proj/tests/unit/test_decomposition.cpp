#include <doctest.h>

#include <random>

#include "euclid/decomposition.hpp"
#include "euclid/enumerate.hpp"
#include "support.hpp"

using namespace euclid;
using testing::el;
using testing::error_of;
using testing::Z;

namespace {

std::optional<ErrorCode> decomposition_error(const std::function<void()>& fn, std::string* witness = nullptr) {
  try {
    fn();
  } catch (const DecompositionError& e) {
    if (witness) *witness = render(e.witness());
    return e.code();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("x^3+x+1 over F2") {
  const auto P = DomainSpec::poly(2);
  const auto f = EuclideanFnSpec::degree();
  const auto a = el(P, "x^3+x+1");

  const auto by_x = decompose_by(f, a, el(P, "x"));
  CHECK(testing::rendered(by_x.coefficients) == std::vector<std::string>{"1", "1", "0", "1"});
  CHECK(horner(by_x) == a);

  // Substituting x = y + 1: (y+1)^3 + (y+1) + 1 = y^3 + y^2 + 1.
  const auto shifted = decompose_by(f, a, el(P, "x+1"));
  CHECK(testing::rendered(shifted.coefficients) == std::vector<std::string>{"1", "0", "1", "1"});
  CHECK(horner(shifted) == a);
}

TEST_CASE("random polynomials round-trip through horner") {
  std::mt19937 rng(2024);
  for (int q : {2, 3, 5}) {
    const auto P = DomainSpec::poly(q);
    const auto bases = enumerate_nonzero(P, Window::degree(2));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<FieldElem> coeffs(1 + rng() % 9);
      for (auto& c : coeffs) c = static_cast<FieldElem>(rng() % q);
      const Element a = Element::poly(q, coeffs);
      const Element& x = bases[rng() % bases.size()];
      if (degree(x) != 1) continue;  // remainders mod a linear base are constants
      if (a.is_zero()) continue;
      CAPTURE(render(a));
      CAPTURE(render(x));
      const auto d = decompose_by(EuclideanFnSpec::degree(), a, x);
      CHECK(horner(d) == a);
      for (const auto& c : d.coefficients) CHECK((c.is_zero() || degree(c) == 0));
    }
  }
}

TEST_CASE("decomposition failures") {
  const auto P = DomainSpec::poly(2);
  std::string witness;
  CHECK(decomposition_error([&] { (void)decompose_by(EuclideanFnSpec::degree(), el(P, "x^3+x+1"), el(P, "x^2")); },
                            &witness) == ErrorCode::NonUnitRemainder);
  CHECK(witness == "x+1");

  // Division in the integers is not unique under |.|: 7 = 2*3 + 1 = 3*3 + (-2).
  CHECK(decomposition_error([] { (void)decompose_by(EuclideanFnSpec::abs_value(), Z(7), Z(3)); }, &witness) ==
        ErrorCode::NonUniqueStep);
  CHECK(witness == "7");

  CHECK(decomposition_error([&] { (void)decompose_by(EuclideanFnSpec::degree(), el(P, "x"), Element::zero(P)); }) ==
        ErrorCode::DivisionByZero);
  CHECK(decomposition_error([&] { (void)decompose_by(EuclideanFnSpec::degree(), el(P, "x"), el(P, "1")); }) ==
        ErrorCode::InvalidFunction);
}

TEST_CASE("zero decomposes to the empty expansion") {
  const auto P = DomainSpec::poly(3);
  const auto d = decompose_by(EuclideanFnSpec::degree(), Element::zero(P), el(P, "x+2"));
  CHECK(horner(d).is_zero());
}

TEST_CASE("units together with zero closed under addition") {
  CHECK(unit_field_closure(DomainSpec::poly(2), Window::degree(3)).holds_on_window());
  CHECK(unit_field_closure(DomainSpec::poly(3), Window::degree(2)).holds_on_window());
  CHECK(unit_field_closure(DomainSpec::finite_field(5), Window::whole()).verdict == Verdict::ExhaustivelyVerified);
  CHECK(unit_field_closure(DomainSpec::series(2, 4), Window::whole()).holds_on_window() == false);

  const auto z = unit_field_closure(DomainSpec::integers(), Window::magnitude(5));
  REQUIRE(z.violated());
  CHECK(testing::rendered(z.witnesses.front().elements) == std::vector<std::string>{"1", "1", "2"});

  CHECK(unit_field_closure(DomainSpec::quadratic(-1), Window::magnitude(3)).violated());
}
