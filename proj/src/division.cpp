#include "euclid/division.hpp"

#include <algorithm>
#include <stdexcept>

#include "euclid/enumerate.hpp"
#include "euclid/errors.hpp"
#include "euclid/notation.hpp"

namespace euclid {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// Nearest integer of the form offset + step*k to num/den; on a tie the
/// candidate of smaller magnitude wins (the positive one if they match).
BigInt nearest(BigInt num, BigInt den, int step, const BigInt& offset) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const BigInt k = floor_div(num - offset * den, step * den);
  const BigInt lo = offset + step * k;
  const BigInt hi = lo + step;
  const BigInt below = num - lo * den;
  const BigInt above = hi * den - num;
  if (below < above) return lo;
  if (above < below) return hi;
  const BigInt alo = abs(lo), ahi = abs(hi);
  if (alo < ahi) return lo;
  return hi;
}

QuotientRemainder divide_quadratic(const Element& a, const Element& b) {
  const DomainSpec& dom = a.domain();
  const auto& x = a.as_quadratic();
  const auto& y = b.as_quadratic();
  const BigInt nb4 = y.u * y.u - dom.d * y.v * y.v;
  const BigInt re2 = 2 * (x.u * y.u - dom.d * x.v * y.v);
  const BigInt im2 = 2 * (x.v * y.u - x.u * y.v);
  BigInt u, v;
  if (dom.half_lattice()) {
    v = nearest(im2, nb4, 1, 0);
    u = nearest(re2, nb4, 2, (v & 1) == 0 ? BigInt(0) : BigInt(1));
  } else {
    u = nearest(re2, nb4, 2, 0);
    v = nearest(im2, nb4, 2, 0);
  }
  Element q(dom, QuadCoords{u, v});
  Element r = a - q * b;
  return {std::move(q), std::move(r)};
}

std::vector<Element> torsion_units(const DomainSpec& dom) {
  if (dom.kind == DomainKind::QuadraticRing && dom.d < 0) return units_in_window(dom, Window::magnitude(2));
  return {Element::one(dom), -Element::one(dom)};
}

/// Unit u making g*u the normalized representative.
Element normalizing_unit(const Element& g) {
  const DomainSpec& dom = g.domain();
  switch (dom.kind) {
    case DomainKind::Integers:
      return Element::from_int(dom, g.as_integer() < 0 ? -1 : 1);
    case DomainKind::FiniteField:
      return *inverse(g);
    case DomainKind::PolyRing:
      return Element::poly(dom.q, {dom.field().inv(g.coefficients().back())});
    case DomainKind::SeriesRing: {
      const int k = order(g);
      const Element xk = pow(Element::variable(dom), static_cast<unsigned>(k));
      return *inverse(*exact_quotient(g, xk));
    }
    case DomainKind::QuadraticRing: {
      std::optional<Element> best_unit;
      std::optional<Element> best;
      for (const Element& u : torsion_units(dom)) {
        Element cand = g * u;
        if (!best || ElementLess{}(*best, cand)) {
          best = cand;
          best_unit = u;
        }
      }
      return *best_unit;
    }
  }
  return Element::one(dom);
}

}  // namespace

CandidateDivision make_division(const EuclideanFnSpec& f, const Element& a, const Element& b,
                                const Element& q, const Element& r) {
  const bool valid = is_valid_division(f, a, b, q, r);
  return CandidateDivision{a, b, q, r, valid};
}

bool is_valid_division(const EuclideanFnSpec& f, const Element& a, const Element& b,
                       const Element& q, const Element& r) {
  require_same_domain(a, b);
  require_same_domain(a, q);
  require_same_domain(a, r);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "candidate division by 0");
  if (!(a == q * b + r))
    throw Error(ErrorCode::IdentityFails, render(a) + " != (" + render(q) + ")*(" + render(b) +
                                              ") + (" + render(r) + ")");
  if (r.is_zero()) return true;
  return eval_f(f, r) < eval_f(f, b);
}

QuotientRemainder canonical_divide(const Element& a, const Element& b) {
  require_same_domain(a, b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by 0 in " + describe(b.domain()));
  const DomainSpec& dom = a.domain();
  switch (dom.kind) {
    case DomainKind::Integers: {
      const BigInt& x = a.as_integer();
      const BigInt& y = b.as_integer();
      BigInt r = x % y;
      if (r < 0) r += abs(y);
      BigInt q = (x - r) / y;
      return {Element(dom, std::move(q)), Element(dom, std::move(r))};
    }
    case DomainKind::QuadraticRing: return divide_quadratic(a, b);
    case DomainKind::FiniteField: return {*exact_quotient(a, b), Element::zero(dom)};
    case DomainKind::PolyRing: {
      auto [q, r] = poly_divmod(a, b);
      return {std::move(q), std::move(r)};
    }
    case DomainKind::SeriesRing: {
      if (a.is_zero() || order(a) >= order(b)) return {*exact_quotient(a, b), Element::zero(dom)};
      return {Element::zero(dom), a};
    }
  }
  throw Error(ErrorCode::InvalidDomain, "unknown domain kind");
}

EnumerationResult enumerate_valid_divisions(const EuclideanFnSpec& f, const Element& a,
                                            const Element& b, const std::optional<Window>& window) {
  require_same_domain(a, b);
  const DomainSpec& dom = a.domain();
  require_compatible(f, dom);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by 0 in " + describe(dom));
  const Nat fb = eval_f(f, b);

  EnumerationResult result;
  std::vector<Element> remainders;
  if (auto sub = sublevel_set(f, dom, fb)) {
    result.complete = true;
    remainders = std::move(*sub);
  } else if (window) {
    for (Element& r : enumerate_nonzero(dom, *window)) {
      try {
        if (eval_f(f, r) < fb) remainders.push_back(std::move(r));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RangeExceeded && e.code() != ErrorCode::PrecisionExhausted) throw;
        ++result.skipped;
      }
    }
  } else {
    throw Error(ErrorCode::WindowRequired,
                "sublevel sets of " + describe(f) + " on " + describe(dom) + " are not enumerable; pass a window");
  }

  auto consider = [&](const Element& r) {
    if (auto q = exact_quotient(a - r, b)) result.divisions.push_back(CandidateDivision{a, b, *q, r, true});
  };
  consider(Element::zero(dom));
  for (const Element& r : remainders) consider(r);
  return result;
}

GcdResult gcd_extended(const Element& a, const Element& b) {
  require_same_domain(a, b);
  const DomainSpec& dom = a.domain();
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::DivisionByZero, "gcd(0, 0) is undefined");
  Element r0 = a, r1 = b;
  Element s0 = Element::one(dom), s1 = Element::zero(dom);
  Element t0 = Element::zero(dom), t1 = Element::one(dom);
  while (!r1.is_zero()) {
    auto [q, r] = canonical_divide(r0, r1);
    Element s2 = s0 - q * s1;
    Element t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Element u = normalizing_unit(r0);
  GcdResult out{r0 * u, s0 * u, t0 * u};
  if (!(out.g == out.s * a + out.t * b))
    throw std::logic_error("gcd Bezout identity failed for " + render(a) + ", " + render(b));
  return out;
}

}  // namespace euclid
