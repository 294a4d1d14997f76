#include "euclid/euclidean_function.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "euclid/enumerate.hpp"
#include "euclid/errors.hpp"
#include "euclid/notation.hpp"

namespace euclid {

namespace {

Nat to_nat(const BigInt& n) {
  if (n > BigInt(UINT64_MAX)) throw Error(ErrorCode::RangeExceeded, "value does not fit in 64 bits");
  return Nat{static_cast<std::uint64_t>(n)};
}

bool is_builtin(FnKind k) {
  return k == FnKind::AbsValue || k == FnKind::Degree || k == FnKind::Order ||
         k == FnKind::QuadNorm || k == FnKind::PhiDeg;
}

Nat eval_base(const EuclideanFnSpec& f, FnKind kind, const Element& a) {
  switch (kind) {
    case FnKind::AbsValue: return to_nat(abs(a.as_integer()));
    case FnKind::Degree: return Nat{static_cast<std::uint64_t>(degree(a))};
    case FnKind::Order: return Nat{static_cast<std::uint64_t>(order(a))};
    case FnKind::QuadNorm: return to_nat(abs(signed_norm(a)));
    case FnKind::PhiDeg: {
      const auto deg = static_cast<std::size_t>(degree(a));
      if (deg >= f.phi.size())
        throw Error(ErrorCode::RangeExceeded,
                    "degree " + std::to_string(deg) + " is beyond phi's range (" +
                        std::to_string(f.phi.size()) + " entries)");
      return f.phi[deg];
    }
    case FnKind::FieldTable: {
      if (a.domain().q != f.field_q)
        throw Error(ErrorCode::IncompatibleFunction, "field table is for F" + std::to_string(f.field_q));
      auto it = f.table.find(a.as_field());
      if (it == f.table.end())
        throw Error(ErrorCode::InvalidFunction, "field table has no entry for " + render(a));
      return it->second;
    }
    case FnKind::ExceptionTable: break;
  }
  throw Error(ErrorCode::InvalidFunction, "exception table base must be a built-in function");
}

/// Nonzero elements of a coefficient ring whose numerals lie in [lo, hi).
std::vector<Element> numeral_range(const DomainSpec& domain, std::uint64_t lo, std::uint64_t hi) {
  if (hi - lo > kMaxWindowElements)
    throw Error(ErrorCode::InvalidWindow, "level set exceeds " + std::to_string(kMaxWindowElements) + " elements");
  std::vector<Element> out;
  out.reserve(hi - lo);
  for (std::uint64_t i = lo; i < hi; ++i) out.push_back(element_from_index(domain, i));
  return out;
}

std::uint64_t q_power(int q, std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    r *= static_cast<std::uint64_t>(q);
    if (r > (kMaxWindowElements << 2))
      throw Error(ErrorCode::InvalidWindow, "level set exceeds " + std::to_string(kMaxWindowElements) + " elements");
  }
  return r;
}

/// Elements of O_d (d < 0) with norm in [lo, hi), lexicographic on (u, v).
std::vector<Element> norm_shell(const DomainSpec& domain, std::uint64_t lo, std::uint64_t hi) {
  std::vector<Element> out;
  if (hi == 0) return out;
  const std::int64_t mag = -static_cast<std::int64_t>(domain.d);
  // u^2 + |d| v^2 = 4N < 4 hi bounds both coordinates.
  std::int64_t ulim = 0;
  while (static_cast<std::uint64_t>((ulim + 1) * (ulim + 1)) < 4 * hi) ++ulim;
  std::int64_t vlim = 0;
  while (static_cast<std::uint64_t>(mag * (vlim + 1) * (vlim + 1)) < 4 * hi) ++vlim;
  for (std::int64_t u = -ulim; u <= ulim; ++u)
    for (std::int64_t v = -vlim; v <= vlim; ++v) {
      const bool ok = domain.half_lattice() ? ((u - v) % 2 == 0) : (u % 2 == 0 && v % 2 == 0);
      if (!ok || (u == 0 && v == 0)) continue;
      const auto n4 = static_cast<std::uint64_t>(u * u + mag * v * v);
      if (n4 >= 4 * lo && n4 < 4 * hi) out.push_back(Element(domain, QuadCoords{BigInt(u), BigInt(v)}));
    }
  return out;
}

/// Residues with order in [lo, hi), hi <= T.
std::vector<Element> order_band(const DomainSpec& domain, std::uint64_t lo, std::uint64_t hi) {
  std::vector<Element> out;
  const auto all = q_power(domain.q, static_cast<std::uint64_t>(domain.precision));
  if (all > kMaxWindowElements)
    throw Error(ErrorCode::InvalidWindow, "series residue ring is too large to enumerate");
  for (std::uint64_t i = 1; i < all; ++i) {
    Element e = element_from_index(domain, i);
    const auto ord = static_cast<std::uint64_t>(order(e));
    if (ord >= lo && ord < hi) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::string_view to_string(FnKind kind) {
  switch (kind) {
    case FnKind::AbsValue: return "AbsValue";
    case FnKind::Degree: return "Degree";
    case FnKind::Order: return "Order";
    case FnKind::QuadNorm: return "QuadNorm";
    case FnKind::PhiDeg: return "PhiDeg";
    case FnKind::FieldTable: return "FieldTable";
    case FnKind::ExceptionTable: return "ExceptionTable";
  }
  return "?";
}

std::string_view to_string(SpecViolation::Kind kind) {
  switch (kind) {
    case SpecViolation::Kind::NonIncreasingPhi: return "NonIncreasingPhi";
    case SpecViolation::Kind::EmptyPhi: return "EmptyPhi";
    case SpecViolation::Kind::PartialTable: return "PartialTable";
    case SpecViolation::Kind::BadTableKey: return "BadTableKey";
    case SpecViolation::Kind::BadBase: return "BadBase";
    case SpecViolation::Kind::ExceptionAtZero: return "ExceptionAtZero";
    case SpecViolation::Kind::DuplicateException: return "DuplicateException";
  }
  return "?";
}

namespace {

EuclideanFnSpec of_kind(FnKind kind) {
  EuclideanFnSpec f;
  f.kind = kind;
  return f;
}

}  // namespace

EuclideanFnSpec EuclideanFnSpec::abs_value() { return of_kind(FnKind::AbsValue); }
EuclideanFnSpec EuclideanFnSpec::degree() { return of_kind(FnKind::Degree); }
EuclideanFnSpec EuclideanFnSpec::order() { return of_kind(FnKind::Order); }
EuclideanFnSpec EuclideanFnSpec::quad_norm() { return of_kind(FnKind::QuadNorm); }

EuclideanFnSpec EuclideanFnSpec::phi_deg(std::vector<Nat> phi) {
  EuclideanFnSpec f = of_kind(FnKind::PhiDeg);
  f.phi = std::move(phi);
  return f;
}

EuclideanFnSpec EuclideanFnSpec::field_table(int q, std::map<FieldElem, Nat> table) {
  EuclideanFnSpec f = of_kind(FnKind::FieldTable);
  f.field_q = q;
  f.table = std::move(table);
  return f;
}

EuclideanFnSpec EuclideanFnSpec::constant(int q, Nat value) {
  std::map<FieldElem, Nat> table;
  for (int i = 1; i < q; ++i) table[static_cast<FieldElem>(i)] = value;
  return field_table(q, std::move(table));
}

EuclideanFnSpec EuclideanFnSpec::with_exceptions(const EuclideanFnSpec& base,
                                                 std::vector<std::pair<Element, Nat>> exceptions) {
  EuclideanFnSpec f = of_kind(FnKind::ExceptionTable);
  f.base = base.kind;
  f.phi = base.phi;
  f.exceptions = std::move(exceptions);
  return f;
}

std::optional<SpecViolation> validate_fspec(const EuclideanFnSpec& f) {
  using K = SpecViolation::Kind;
  const bool uses_phi = f.kind == FnKind::PhiDeg ||
                        (f.kind == FnKind::ExceptionTable && f.base == FnKind::PhiDeg);
  if (uses_phi) {
    if (f.phi.empty()) return SpecViolation{K::EmptyPhi, 0, {}, {}, {}, {}, "phi table is empty"};
    for (std::size_t i = 0; i + 1 < f.phi.size(); ++i)
      if (f.phi[i] >= f.phi[i + 1])
        return SpecViolation{K::NonIncreasingPhi, i, f.phi[i], f.phi[i + 1], {}, {},
                             "phi(" + std::to_string(i) + ")=" + std::to_string(f.phi[i].value) +
                                 " is not below phi(" + std::to_string(i + 1) +
                                 ")=" + std::to_string(f.phi[i + 1].value)};
  }
  if (f.kind == FnKind::FieldTable) {
    if (!FiniteField::supported(f.field_q))
      return SpecViolation{K::BadTableKey, 0, {}, {}, {}, {},
                           "unsupported field size " + std::to_string(f.field_q)};
    const DomainSpec field = DomainSpec::finite_field(f.field_q);
    for (const auto& [key, value] : f.table)
      if (key == 0 || key >= f.field_q)
        return SpecViolation{K::BadTableKey, 0, {}, {}, key, {},
                             "table key " + std::to_string(key) + " is not a nonzero element of " +
                                 describe(field)};
    for (int i = 1; i < f.field_q; ++i) {
      const auto e = static_cast<FieldElem>(i);
      if (!f.table.contains(e))
        return SpecViolation{K::PartialTable, 0, {}, {}, e, {},
                             "table has no value for " + render(Element(field, e))};
    }
  }
  if (f.kind == FnKind::ExceptionTable) {
    if (!is_builtin(f.base))
      return SpecViolation{K::BadBase, 0, {}, {}, {}, {},
                           "exception table base must be a built-in kind, got " +
                               std::string(to_string(f.base))};
    std::set<Element, ElementLess> seen;
    for (const auto& [point, value] : f.exceptions) {
      if (point.is_zero())
        return SpecViolation{K::ExceptionAtZero, 0, {}, {}, {}, point, "exception at 0"};
      if (!seen.insert(point).second)
        return SpecViolation{K::DuplicateException, 0, {}, {}, {}, point,
                             "duplicate exception at " + render(point)};
    }
  }
  return std::nullopt;
}

bool compatible(const EuclideanFnSpec& f, const DomainSpec& domain) {
  auto kind_fits = [&](FnKind k) {
    switch (k) {
      case FnKind::AbsValue: return domain.kind == DomainKind::Integers;
      case FnKind::Degree:
      case FnKind::PhiDeg: return domain.kind == DomainKind::PolyRing;
      case FnKind::Order: return domain.kind == DomainKind::SeriesRing;
      case FnKind::QuadNorm: return domain.kind == DomainKind::QuadraticRing;
      case FnKind::FieldTable: return domain.kind == DomainKind::FiniteField && domain.q == f.field_q;
      case FnKind::ExceptionTable: return false;
    }
    return false;
  };
  if (f.kind != FnKind::ExceptionTable) return kind_fits(f.kind);
  if (!kind_fits(f.base)) return false;
  return std::all_of(f.exceptions.begin(), f.exceptions.end(),
                     [&](const auto& e) { return e.first.domain() == domain; });
}

void require_compatible(const EuclideanFnSpec& f, const DomainSpec& domain) {
  if (auto v = validate_fspec(f))
    throw Error(ErrorCode::InvalidFunction, std::string(to_string(v->kind)) + ": " + v->message);
  if (!compatible(f, domain))
    throw Error(ErrorCode::IncompatibleFunction, describe(f) + " is not defined on " + describe(domain));
}

EuclideanFnSpec default_function(const DomainSpec& domain) {
  switch (domain.kind) {
    case DomainKind::Integers: return EuclideanFnSpec::abs_value();
    case DomainKind::QuadraticRing: return EuclideanFnSpec::quad_norm();
    case DomainKind::FiniteField: return EuclideanFnSpec::constant(domain.q, Nat{0});
    case DomainKind::PolyRing: return EuclideanFnSpec::degree();
    case DomainKind::SeriesRing: return EuclideanFnSpec::order();
  }
  return EuclideanFnSpec::abs_value();
}

bool is_strongly_builtin(FnKind kind) noexcept { return is_builtin(kind); }

Nat eval_f(const EuclideanFnSpec& f, const Element& a) {
  if (a.is_zero()) {
    if (a.domain().kind == DomainKind::SeriesRing)
      throw Error(ErrorCode::PrecisionExhausted,
                  "residue vanishes modulo x^" + std::to_string(a.domain().precision));
    throw Error(ErrorCode::EvalAtZero, "Euclidean functions are not evaluated at 0");
  }
  if (f.kind == FnKind::ExceptionTable) {
    for (const auto& [point, value] : f.exceptions)
      if (point == a) return value;
    return eval_base(f, f.base, a);
  }
  return eval_base(f, f.kind, a);
}

std::optional<std::vector<Element>> sublevel_set(const EuclideanFnSpec& f, const DomainSpec& domain,
                                                 Nat bound) {
  const std::uint64_t b = bound.value;
  switch (f.kind) {
    case FnKind::AbsValue: {
      std::vector<Element> out;
      for (std::uint64_t m = 1; m < b; ++m) {
        out.push_back(Element(domain, BigInt(m)));
        out.push_back(Element(domain, BigInt(-BigInt(m))));
      }
      return out;
    }
    case FnKind::Degree:
      return numeral_range(domain, 1, b == 0 ? 1 : q_power(domain.q, b));
    case FnKind::PhiDeg: {
      if (f.phi.empty() || f.phi.back().value < b) return std::nullopt;
      std::uint64_t degrees = 0;
      while (degrees < f.phi.size() && f.phi[degrees].value < b) ++degrees;
      return numeral_range(domain, 1, degrees == 0 ? 1 : q_power(domain.q, degrees));
    }
    case FnKind::QuadNorm:
      if (domain.d > 0) return std::nullopt;
      return norm_shell(domain, 1, b);
    case FnKind::Order:
      return order_band(domain, 0, std::min<std::uint64_t>(b, static_cast<std::uint64_t>(domain.precision)));
    case FnKind::FieldTable: {
      std::vector<Element> out;
      for (int i = 1; i < domain.q; ++i) {
        Element e(domain, static_cast<FieldElem>(i));
        if (eval_f(f, e).value < b) out.push_back(std::move(e));
      }
      return out;
    }
    case FnKind::ExceptionTable: {
      EuclideanFnSpec base;
      base.kind = f.base;
      base.phi = f.phi;
      auto from_base = sublevel_set(base, domain, bound);
      if (!from_base) return std::nullopt;
      std::vector<Element> out;
      auto is_exception = [&](const Element& e) {
        return std::any_of(f.exceptions.begin(), f.exceptions.end(),
                           [&](const auto& x) { return x.first == e; });
      };
      for (auto& e : *from_base)
        if (!is_exception(e)) out.push_back(std::move(e));
      for (const auto& [point, value] : f.exceptions)
        if (value.value < b) out.push_back(point);
      std::sort(out.begin(), out.end(), enumeration_less);
      return out;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> level_set(const EuclideanFnSpec& g, const DomainSpec& domain,
                                              Nat level) {
  const std::uint64_t l = level.value;
  switch (g.kind) {
    case FnKind::AbsValue:
      if (l == 0) return std::vector<Element>{};
      return std::vector<Element>{Element(domain, BigInt(l)), Element(domain, BigInt(-BigInt(l)))};
    case FnKind::Degree:
      return numeral_range(domain, q_power(domain.q, l), q_power(domain.q, l + 1));
    case FnKind::PhiDeg: {
      if (g.phi.empty() || l > g.phi.back().value) return std::nullopt;
      for (std::uint64_t k = 0; k < g.phi.size(); ++k)
        if (g.phi[k].value == l) return numeral_range(domain, q_power(domain.q, k), q_power(domain.q, k + 1));
      return std::vector<Element>{};
    }
    case FnKind::QuadNorm:
      if (domain.d > 0) return std::nullopt;
      return norm_shell(domain, l, l + 1);
    case FnKind::Order:
      if (l >= static_cast<std::uint64_t>(domain.precision)) return std::nullopt;
      return order_band(domain, l, l + 1);
    case FnKind::FieldTable:
    case FnKind::ExceptionTable: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace euclid
