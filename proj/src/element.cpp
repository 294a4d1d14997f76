#include "euclid/element.hpp"

#include <algorithm>
#include <string>

#include "euclid/errors.hpp"

namespace euclid {

namespace {

bool is_even(const BigInt& n) { return (n & 1) == 0; }

void trim(std::vector<FieldElem>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

[[noreturn]] void bad_payload(const DomainSpec& domain, const std::string& what) {
  throw Error(ErrorCode::DomainMismatch, describe(domain) + ": " + what);
}

void check_payload(const DomainSpec& domain, const Payload& payload) {
  switch (domain.kind) {
    case DomainKind::Integers:
      if (!std::holds_alternative<BigInt>(payload)) bad_payload(domain, "expected an integer payload");
      return;
    case DomainKind::QuadraticRing: {
      const auto* p = std::get_if<QuadCoords>(&payload);
      if (p == nullptr) bad_payload(domain, "expected doubled coordinates");
      if (domain.half_lattice()) {
        if (is_even(p->u) != is_even(p->v))
          bad_payload(domain, "doubled coordinates must share parity");
      } else if (!is_even(p->u) || !is_even(p->v)) {
        bad_payload(domain, "doubled coordinates must both be even");
      }
      return;
    }
    case DomainKind::FiniteField: {
      const auto* p = std::get_if<FieldElem>(&payload);
      if (p == nullptr || *p >= domain.q) bad_payload(domain, "field index out of range");
      return;
    }
    case DomainKind::PolyRing: {
      const auto* p = std::get_if<PolyCoeffs>(&payload);
      if (p == nullptr) bad_payload(domain, "expected polynomial coefficients");
      if (!p->c.empty() && p->c.back() == 0) bad_payload(domain, "trailing zero coefficient");
      for (FieldElem x : p->c)
        if (x >= domain.q) bad_payload(domain, "coefficient out of range");
      return;
    }
    case DomainKind::SeriesRing: {
      const auto* p = std::get_if<SeriesCoeffs>(&payload);
      if (p == nullptr) bad_payload(domain, "expected series coefficients");
      if (p->c.size() != static_cast<std::size_t>(domain.precision))
        bad_payload(domain, "series residue must have exactly T coefficients");
      for (FieldElem x : p->c)
        if (x >= domain.q) bad_payload(domain, "coefficient out of range");
      return;
    }
  }
}

std::vector<FieldElem> poly_mul(const FiniteField& k, const std::vector<FieldElem>& a,
                                const std::vector<FieldElem>& b, std::size_t limit) {
  if (a.empty() || b.empty()) return std::vector<FieldElem>(limit == SIZE_MAX ? 0 : limit, 0);
  std::size_t n = a.size() + b.size() - 1;
  std::vector<FieldElem> out(std::min(n, limit), 0);
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j)
      out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
  }
  if (limit != SIZE_MAX) out.resize(limit, 0);
  return out;
}

/// Inverse of a unit series modulo x^n (c[0] != 0).
std::vector<FieldElem> series_inverse(const FiniteField& k, const std::vector<FieldElem>& c,
                                      std::size_t n) {
  std::vector<FieldElem> inv(n, 0);
  const FieldElem c0inv = k.inv(c[0]);
  inv[0] = c0inv;
  for (std::size_t i = 1; i < n; ++i) {
    FieldElem acc = 0;
    for (std::size_t j = 1; j <= i && j < c.size(); ++j) acc = k.add(acc, k.mul(c[j], inv[i - j]));
    inv[i] = k.mul(k.neg(acc), c0inv);
  }
  return inv;
}

}  // namespace

Element::Element(DomainSpec domain, Payload payload)
    : domain_(domain), payload_(std::move(payload)) {
  check_payload(domain_, payload_);
}

Element Element::zero(const DomainSpec& domain) { return from_int(domain, 0); }
Element Element::one(const DomainSpec& domain) { return from_int(domain, 1); }

Element Element::integer(BigInt value) { return Element(DomainSpec::integers(), std::move(value)); }

Element Element::quadratic(int d, BigInt u2, BigInt v2) {
  return Element(DomainSpec::quadratic(d), QuadCoords{std::move(u2), std::move(v2)});
}

Element Element::field(int q, FieldElem value) {
  return Element(DomainSpec::finite_field(q), value);
}

Element Element::poly(int q, std::vector<FieldElem> coeffs) {
  trim(coeffs);
  return Element(DomainSpec::poly(q), PolyCoeffs{std::move(coeffs)});
}

Element Element::series(int q, int precision, std::vector<FieldElem> coeffs) {
  coeffs.resize(static_cast<std::size_t>(precision), 0);
  return Element(DomainSpec::series(q, precision), SeriesCoeffs{std::move(coeffs)});
}

Element Element::variable(const DomainSpec& domain) {
  switch (domain.kind) {
    case DomainKind::PolyRing: return Element(domain, PolyCoeffs{{0, 1}});
    case DomainKind::SeriesRing: {
      std::vector<FieldElem> c(static_cast<std::size_t>(domain.precision), 0);
      c[1] = 1;
      return Element(domain, SeriesCoeffs{std::move(c)});
    }
    default:
      throw Error(ErrorCode::DomainMismatch, describe(domain) + " has no variable x");
  }
}

Element Element::from_int(const DomainSpec& domain, long long n) {
  switch (domain.kind) {
    case DomainKind::Integers: return Element(domain, BigInt(n));
    case DomainKind::QuadraticRing: return Element(domain, QuadCoords{BigInt(2 * n), BigInt(0)});
    case DomainKind::FiniteField:
    case DomainKind::PolyRing:
    case DomainKind::SeriesRing: {
      const int p = domain.field().characteristic();
      const auto r = static_cast<FieldElem>(((n % p) + p) % p);
      if (domain.kind == DomainKind::FiniteField) return Element(domain, r);
      if (domain.kind == DomainKind::PolyRing)
        return Element(domain, PolyCoeffs{r == 0 ? std::vector<FieldElem>{} : std::vector<FieldElem>{r}});
      std::vector<FieldElem> c(static_cast<std::size_t>(domain.precision), 0);
      c[0] = r;
      return Element(domain, SeriesCoeffs{std::move(c)});
    }
  }
  throw Error(ErrorCode::InvalidDomain, "unknown domain kind");
}

bool Element::is_zero() const noexcept {
  switch (domain_.kind) {
    case DomainKind::Integers: return std::get<BigInt>(payload_) == 0;
    case DomainKind::QuadraticRing: {
      const auto& p = std::get<QuadCoords>(payload_);
      return p.u == 0 && p.v == 0;
    }
    case DomainKind::FiniteField: return std::get<FieldElem>(payload_) == 0;
    case DomainKind::PolyRing: return std::get<PolyCoeffs>(payload_).c.empty();
    case DomainKind::SeriesRing: {
      const auto& c = std::get<SeriesCoeffs>(payload_).c;
      return std::all_of(c.begin(), c.end(), [](FieldElem x) { return x == 0; });
    }
  }
  return false;
}

bool Element::is_one() const { return *this == one(domain_); }

const BigInt& Element::as_integer() const {
  if (const auto* p = std::get_if<BigInt>(&payload_)) return *p;
  throw Error(ErrorCode::DomainMismatch, describe(domain_) + " element is not an integer");
}

const QuadCoords& Element::as_quadratic() const {
  if (const auto* p = std::get_if<QuadCoords>(&payload_)) return *p;
  throw Error(ErrorCode::DomainMismatch, describe(domain_) + " element is not quadratic");
}

FieldElem Element::as_field() const {
  if (const auto* p = std::get_if<FieldElem>(&payload_)) return *p;
  throw Error(ErrorCode::DomainMismatch, describe(domain_) + " element is not a field element");
}

const std::vector<FieldElem>& Element::coefficients() const {
  if (const auto* p = std::get_if<PolyCoeffs>(&payload_)) return p->c;
  if (const auto* p = std::get_if<SeriesCoeffs>(&payload_)) return p->c;
  throw Error(ErrorCode::DomainMismatch, describe(domain_) + " element has no coefficients");
}

void require_same_domain(const Element& a, const Element& b) {
  if (!(a.domain() == b.domain()))
    throw Error(ErrorCode::DomainMismatch,
                "operands from " + describe(a.domain()) + " and " + describe(b.domain()));
}

Element operator+(const Element& a, const Element& b) {
  require_same_domain(a, b);
  const DomainSpec& dom = a.domain();
  switch (dom.kind) {
    case DomainKind::Integers: return Element(dom, a.as_integer() + b.as_integer());
    case DomainKind::QuadraticRing: {
      const auto& x = a.as_quadratic();
      const auto& y = b.as_quadratic();
      return Element(dom, QuadCoords{x.u + y.u, x.v + y.v});
    }
    case DomainKind::FiniteField: return Element(dom, dom.field().add(a.as_field(), b.as_field()));
    case DomainKind::PolyRing:
    case DomainKind::SeriesRing: {
      const auto& k = dom.field();
      const auto& x = a.coefficients();
      const auto& y = b.coefficients();
      std::vector<FieldElem> out(std::max(x.size(), y.size()), 0);
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = k.add(i < x.size() ? x[i] : 0, i < y.size() ? y[i] : 0);
      if (dom.kind == DomainKind::SeriesRing) return Element(dom, SeriesCoeffs{std::move(out)});
      trim(out);
      return Element(dom, PolyCoeffs{std::move(out)});
    }
  }
  throw Error(ErrorCode::InvalidDomain, "unknown domain kind");
}

Element operator-(const Element& a) {
  const DomainSpec& dom = a.domain();
  switch (dom.kind) {
    case DomainKind::Integers: return Element(dom, BigInt(-a.as_integer()));
    case DomainKind::QuadraticRing: {
      const auto& x = a.as_quadratic();
      return Element(dom, QuadCoords{-x.u, -x.v});
    }
    case DomainKind::FiniteField: return Element(dom, dom.field().neg(a.as_field()));
    case DomainKind::PolyRing:
    case DomainKind::SeriesRing: {
      const auto& k = dom.field();
      std::vector<FieldElem> out = a.coefficients();
      for (auto& c : out) c = k.neg(c);
      if (dom.kind == DomainKind::SeriesRing) return Element(dom, SeriesCoeffs{std::move(out)});
      return Element(dom, PolyCoeffs{std::move(out)});
    }
  }
  throw Error(ErrorCode::InvalidDomain, "unknown domain kind");
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  require_same_domain(a, b);
  const DomainSpec& dom = a.domain();
  switch (dom.kind) {
    case DomainKind::Integers: return Element(dom, BigInt(a.as_integer() * b.as_integer()));
    case DomainKind::QuadraticRing: {
      const auto& x = a.as_quadratic();
      const auto& y = b.as_quadratic();
      BigInt u = x.u * y.u + dom.d * x.v * y.v;
      BigInt v = x.u * y.v + x.v * y.u;
      return Element(dom, QuadCoords{u / 2, v / 2});
    }
    case DomainKind::FiniteField: return Element(dom, dom.field().mul(a.as_field(), b.as_field()));
    case DomainKind::PolyRing: {
      auto out = poly_mul(dom.field(), a.coefficients(), b.coefficients(), SIZE_MAX);
      trim(out);
      return Element(dom, PolyCoeffs{std::move(out)});
    }
    case DomainKind::SeriesRing:
      return Element(dom, SeriesCoeffs{poly_mul(dom.field(), a.coefficients(), b.coefficients(),
                                                static_cast<std::size_t>(dom.precision))});
  }
  throw Error(ErrorCode::InvalidDomain, "unknown domain kind");
}

Element pow(const Element& a, unsigned n) {
  Element result = Element::one(a.domain());
  Element base = a;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

bool is_unit_known(const Element& a) {
  switch (a.domain().kind) {
    case DomainKind::Integers: return abs(a.as_integer()) == 1;
    case DomainKind::QuadraticRing: return abs(signed_norm(a)) == 1;
    case DomainKind::FiniteField: return !a.is_zero();
    case DomainKind::PolyRing: return a.coefficients().size() == 1;
    case DomainKind::SeriesRing: return a.coefficients()[0] != 0;
  }
  return false;
}

int degree(const Element& a) {
  if (a.domain().kind != DomainKind::PolyRing)
    throw Error(ErrorCode::DomainMismatch, "degree needs a polynomial");
  if (a.is_zero()) throw Error(ErrorCode::EvalAtZero, "degree of 0");
  return static_cast<int>(a.coefficients().size()) - 1;
}

int order(const Element& a) {
  if (a.domain().kind != DomainKind::SeriesRing)
    throw Error(ErrorCode::DomainMismatch, "order needs a series");
  const auto& c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return static_cast<int>(i);
  throw Error(ErrorCode::PrecisionExhausted,
              "order of a residue that vanishes modulo x^" + std::to_string(a.domain().precision));
}

BigInt signed_norm(const Element& a) {
  const auto& p = a.as_quadratic();
  BigInt four_n = p.u * p.u - a.domain().d * p.v * p.v;
  return four_n / 4;
}

std::pair<Element, Element> poly_divmod(const Element& a, const Element& b) {
  require_same_domain(a, b);
  if (a.domain().kind != DomainKind::PolyRing)
    throw Error(ErrorCode::DomainMismatch, "poly_divmod needs polynomials");
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by 0");
  const auto& k = a.domain().field();
  const auto& bc = b.coefficients();
  std::vector<FieldElem> rem = a.coefficients();
  const std::size_t db = bc.size() - 1;
  const FieldElem lead_inv = k.inv(bc.back());
  std::vector<FieldElem> quo(rem.size() >= bc.size() ? rem.size() - db : 0, 0);
  while (rem.size() >= bc.size()) {
    const std::size_t shift = rem.size() - bc.size();
    const FieldElem c = k.mul(rem.back(), lead_inv);
    quo[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] = k.sub(rem[shift + j], k.mul(c, bc[j]));
    trim(rem);
  }
  trim(quo);
  return {Element(a.domain(), PolyCoeffs{std::move(quo)}), Element(a.domain(), PolyCoeffs{std::move(rem)})};
}

std::optional<Element> exact_quotient(const Element& a, const Element& b) {
  require_same_domain(a, b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by 0 in " + describe(b.domain()));
  const DomainSpec& dom = a.domain();
  switch (dom.kind) {
    case DomainKind::Integers: {
      const BigInt& x = a.as_integer();
      const BigInt& y = b.as_integer();
      if (x % y != 0) return std::nullopt;
      return Element(dom, BigInt(x / y));
    }
    case DomainKind::QuadraticRing: {
      const auto& x = a.as_quadratic();
      const auto& y = b.as_quadratic();
      const BigInt nb4 = y.u * y.u - dom.d * y.v * y.v;
      const BigInt re = 2 * (x.u * y.u - dom.d * x.v * y.v);
      const BigInt im = 2 * (x.v * y.u - x.u * y.v);
      if (re % nb4 != 0 || im % nb4 != 0) return std::nullopt;
      BigInt u = re / nb4;
      BigInt v = im / nb4;
      const bool ok = dom.half_lattice() ? is_even(u) == is_even(v) : is_even(u) && is_even(v);
      if (!ok) return std::nullopt;
      return Element(dom, QuadCoords{std::move(u), std::move(v)});
    }
    case DomainKind::FiniteField: {
      const auto& k = dom.field();
      return Element(dom, k.mul(a.as_field(), k.inv(b.as_field())));
    }
    case DomainKind::PolyRing: {
      auto [q, r] = poly_divmod(a, b);
      if (!r.is_zero()) return std::nullopt;
      return q;
    }
    case DomainKind::SeriesRing: {
      if (a.is_zero()) return Element::zero(dom);
      const int m = order(b);
      if (order(a) < m) return std::nullopt;
      const auto& k = dom.field();
      const auto t = static_cast<std::size_t>(dom.precision);
      const auto n = t - static_cast<std::size_t>(m);
      const auto& ac = a.coefficients();
      const auto& bc = b.coefficients();
      std::vector<FieldElem> a_shift(ac.begin() + m, ac.end());
      std::vector<FieldElem> b_shift(bc.begin() + m, bc.end());
      auto q = poly_mul(k, a_shift, series_inverse(k, b_shift, n), n);
      q.resize(t, 0);
      return Element(dom, SeriesCoeffs{std::move(q)});
    }
  }
  return std::nullopt;
}

std::optional<Element> inverse(const Element& a) {
  if (a.is_zero()) return std::nullopt;
  return exact_quotient(Element::one(a.domain()), a);
}

bool ElementLess::operator()(const Element& a, const Element& b) const {
  const auto& da = a.domain();
  const auto& db = b.domain();
  if (da.kind != db.kind) return da.kind < db.kind;
  if (da.d != db.d) return da.d < db.d;
  if (da.q != db.q) return da.q < db.q;
  if (da.precision != db.precision) return da.precision < db.precision;
  switch (da.kind) {
    case DomainKind::Integers: return a.as_integer() < b.as_integer();
    case DomainKind::QuadraticRing: {
      const auto& x = a.as_quadratic();
      const auto& y = b.as_quadratic();
      if (x.u != y.u) return x.u < y.u;
      return x.v < y.v;
    }
    case DomainKind::FiniteField: return a.as_field() < b.as_field();
    case DomainKind::PolyRing:
    case DomainKind::SeriesRing: {
      const auto& x = a.coefficients();
      const auto& y = b.coefficients();
      if (x.size() != y.size()) return x.size() < y.size();
      return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
    }
  }
  return false;
}

}  // namespace euclid
