#include <doctest.h>

#include <set>

#include "euclid/division.hpp"
#include "euclid/enumerate.hpp"
#include "support.hpp"

using namespace euclid;
using testing::el;
using testing::error_of;
using testing::Z;

namespace {

using Pair = std::pair<std::string, std::string>;

std::set<Pair> as_set(const std::vector<CandidateDivision>& divs) {
  std::set<Pair> out;
  for (const auto& d : divs) out.emplace(render(d.q), render(d.r));
  return out;
}

/// Brute-force oracle: every quotient q from `qs`, r = a - q b, kept when valid.
std::set<Pair> oracle(const EuclideanFnSpec& f, const Element& a, const Element& b, std::vector<Element> qs) {
  qs.push_back(Element::zero(a.domain()));
  std::set<Pair> out;
  for (const auto& q : qs) {
    const Element r = a - q * b;
    if (r.is_zero() || eval_f(f, r) < eval_f(f, b)) out.emplace(render(q), render(r));
  }
  return out;
}

}  // namespace

TEST_CASE("1 = 0*2 + 1 = 1*2 + (-1) in the integers") {
  const auto res = enumerate_valid_divisions(EuclideanFnSpec::abs_value(), Z(1), Z(2));
  CHECK(res.complete);
  REQUIRE(res.divisions.size() == 2);
  CHECK(res.divisions[0].q == Z(0));
  CHECK(res.divisions[0].r == Z(1));
  CHECK(res.divisions[1].q == Z(1));
  CHECK(res.divisions[1].r == Z(-1));
  for (const auto& d : res.divisions) CHECK(d.valid);
}

TEST_CASE("candidate divisions") {
  const auto f = EuclideanFnSpec::abs_value();
  CHECK(is_valid_division(f, Z(7), Z(3), Z(2), Z(1)));
  CHECK(!is_valid_division(f, Z(7), Z(3), Z(1), Z(4)));
  CHECK(error_of([&] { (void)is_valid_division(f, Z(7), Z(3), Z(2), Z(2)); }) == ErrorCode::IdentityFails);
  CHECK(error_of([&] { (void)is_valid_division(f, Z(7), Z(0), Z(0), Z(7)); }) == ErrorCode::DivisionByZero);
  CHECK(error_of([&] { (void)make_division(f, Z(1), Z(2), Z(1), Z(0)); }) == ErrorCode::IdentityFails);
  CHECK(make_division(f, Z(1), Z(2), Z(1), Z(-1)).valid);
}

TEST_CASE("canonical_divide is valid under each domain's classical function") {
  const std::vector<std::pair<DomainSpec, Window>> cases = {
      {DomainSpec::integers(), Window::magnitude(12)},  {DomainSpec::quadratic(-1), Window::magnitude(6)},
      {DomainSpec::quadratic(-2), Window::magnitude(6)}, {DomainSpec::quadratic(-3), Window::magnitude(6)},
      {DomainSpec::quadratic(-7), Window::magnitude(6)}, {DomainSpec::quadratic(-11), Window::magnitude(6)},
      {DomainSpec::quadratic(2), Window::magnitude(6)},  {DomainSpec::quadratic(3), Window::magnitude(6)},
      {DomainSpec::finite_field(7), Window::whole()},    {DomainSpec::poly(3), Window::degree(3)},
      {DomainSpec::series(2, 5), Window::whole()},
  };
  for (const auto& [d, w] : cases) {
    CAPTURE(describe(d));
    const auto f = default_function(d);
    auto xs = enumerate_nonzero(d, w);
    const auto bs = xs;
    xs.push_back(Element::zero(d));
    for (const auto& a : xs)
      for (const auto& b : bs) {
        const auto [q, r] = canonical_divide(a, b);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || eval_f(f, r) < eval_f(f, b)));
      }
  }
}

TEST_CASE("canonical_divide conventions") {
  auto qr = canonical_divide(Z(7), Z(-2));
  CHECK(qr.q == Z(-3));
  CHECK(qr.r == Z(1));
  qr = canonical_divide(Z(-7), Z(2));
  CHECK(qr.q == Z(-4));
  CHECK(qr.r == Z(1));

  const auto P = DomainSpec::poly(2);
  qr = canonical_divide(el(P, "x^3+x+1"), el(P, "x+1"));
  CHECK(qr.q == el(P, "x^2+x"));
  CHECK(qr.r == el(P, "1"));

  const auto S = DomainSpec::series(2, 6);
  qr = canonical_divide(el(S, "x"), el(S, "x^2"));
  CHECK(qr.q.is_zero());
  CHECK(qr.r == el(S, "x"));
  qr = canonical_divide(el(S, "x^3"), el(S, "x+x^2"));
  CHECK(qr.r.is_zero());
  CHECK(error_of([] { (void)canonical_divide(Z(1), Z(0)); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("enumerate_valid_divisions agrees with brute force") {
  SUBCASE("integers") {
    const auto f = EuclideanFnSpec::abs_value();
    const auto qs = enumerate_nonzero(DomainSpec::integers(), Window::magnitude(30));
    for (int a = -12; a <= 12; ++a)
      for (int b = -6; b <= 6; ++b) {
        if (b == 0) continue;
        const auto res = enumerate_valid_divisions(f, Z(a), Z(b));
        CHECK(res.complete);
        CHECK(as_set(res.divisions) == oracle(f, Z(a), Z(b), qs));
      }
  }
  SUBCASE("polynomials are uniquely divisible under deg") {
    const auto P = DomainSpec::poly(3);
    const auto f = EuclideanFnSpec::degree();
    const auto xs = enumerate_nonzero(P, Window::degree(2));
    const auto qs = enumerate_nonzero(P, Window::degree(3));
    for (const auto& a : xs)
      for (const auto& b : xs) {
        const auto res = enumerate_valid_divisions(f, a, b);
        CHECK(res.complete);
        CHECK(res.divisions.size() == 1);
        CHECK(as_set(res.divisions) == oracle(f, a, b, qs));
      }
  }
  SUBCASE("exception tables") {
    const auto f = EuclideanFnSpec::with_exceptions(EuclideanFnSpec::abs_value(), {{Z(1), Nat(5)}, {Z(-1), Nat(5)}});
    const auto qs = enumerate_nonzero(DomainSpec::integers(), Window::magnitude(30));
    for (int a = -8; a <= 8; ++a)
      for (int b : {-3, 2, 4, 7}) {
        const auto res = enumerate_valid_divisions(f, Z(a), Z(b));
        CHECK(res.complete);
        CHECK(as_set(res.divisions) == oracle(f, Z(a), Z(b), qs));
      }
  }
  SUBCASE("finite field tables") {
    const auto F4 = DomainSpec::finite_field(4);
    const auto f = EuclideanFnSpec::field_table(4, {{1, Nat(0)}, {2, Nat(1)}, {3, Nat(1)}});
    const auto res = enumerate_valid_divisions(f, el(F4, "1"), el(F4, "a"));
    CHECK(as_set(res.divisions) == std::set<Pair>{{"0", "1"}, {"b", "0"}});
    // 1 = 1*a + b holds as an identity but is not valid: f(b) = f(a).
    CHECK(el(F4, "1") * el(F4, "a") + el(F4, "b") == el(F4, "1"));
    CHECK(!is_valid_division(f, el(F4, "1"), el(F4, "a"), el(F4, "1"), el(F4, "b")));
  }
}

TEST_CASE("windowed enumeration when the sublevel set is not derivable") {
  const auto R = DomainSpec::quadratic(2);
  const auto f = EuclideanFnSpec::quad_norm();
  CHECK(error_of([&] { (void)enumerate_valid_divisions(f, el(R, "3"), el(R, "2")); }) == ErrorCode::WindowRequired);
  const auto res = enumerate_valid_divisions(f, el(R, "3"), el(R, "2"), Window::magnitude(8));
  CHECK(!res.complete);
  CHECK(!res.divisions.empty());
  for (const auto& d : res.divisions) CHECK(is_valid_division(f, d.a, d.b, d.q, d.r));
}

TEST_CASE("extended gcd") {
  auto g = gcd_extended(Z(12), Z(-18));
  CHECK(g.g == Z(6));
  CHECK(g.s * Z(12) + g.t * Z(-18) == g.g);
  CHECK(gcd_extended(Z(0), Z(-5)).g == Z(5));
  CHECK(error_of([] { (void)gcd_extended(Z(0), Z(0)); }) == ErrorCode::DivisionByZero);

  const auto G = DomainSpec::quadratic(-1);
  g = gcd_extended(el(G, "5"), el(G, "2+i"));
  CHECK(g.g == el(G, "2+i"));

  const auto P = DomainSpec::poly(3);
  g = gcd_extended(el(P, "x^2+2"), el(P, "x^2+x+1"));  // (x+1)(x+2) and (x+2)^2 over F3
  CHECK(g.g == el(P, "x+2"));

  const auto S = DomainSpec::series(2, 6);
  g = gcd_extended(el(S, "x^2+x^3"), el(S, "x^4"));
  CHECK(g.g == el(S, "x^2"));

  // Bezout, common divisor and normalization across windows.
  const std::vector<std::pair<DomainSpec, Window>> cases = {
      {DomainSpec::integers(), Window::magnitude(15)}, {DomainSpec::quadratic(-1), Window::magnitude(5)},
      {DomainSpec::quadratic(-3), Window::magnitude(5)}, {DomainSpec::quadratic(2), Window::magnitude(4)},
      {DomainSpec::poly(2), Window::degree(3)},        {DomainSpec::finite_field(5), Window::whole()},
  };
  for (const auto& [d, w] : cases) {
    CAPTURE(describe(d));
    const auto xs = enumerate_nonzero(d, w);
    for (const auto& a : xs)
      for (const auto& b : xs) {
        const auto r = gcd_extended(a, b);
        CHECK(r.s * a + r.t * b == r.g);
        CHECK(exact_quotient(a, r.g).has_value());
        CHECK(exact_quotient(b, r.g).has_value());
        // Real quadratic rings have infinitely many units; only torsion units normalize.
        if (!(d.kind == DomainKind::QuadraticRing && d.d > 0)) CHECK(gcd_extended(b, a).g == r.g);
      }
  }
}
