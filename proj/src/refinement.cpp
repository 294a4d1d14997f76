#include "euclid/refinement.hpp"

#include <array>
#include <limits>

#include "euclid/enumerate.hpp"
#include "euclid/errors.hpp"
#include "euclid/notation.hpp"
#include "euclid/parallel.hpp"

namespace euclid {

namespace {

constexpr std::array<std::pair<RefineReason, std::string_view>, 4> kReasons{{
    {RefineReason::ClosedFormField, "ClosedFormField"},
    {RefineReason::FixedPointStrong, "FixedPointStrong"},
    {RefineReason::MonotoneBound, "MonotoneBound"},
    {RefineReason::BoundedSearch, "BoundedSearch"},
}};

// Level scans longer than this give up and fall back to a search.
constexpr std::uint64_t kMaxLevels = 1U << 20;

std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

bool divides(const Element& a, const Element& m) { return exact_quotient(m, a).has_value(); }

CertifiedValue closed_form_field(const EuclideanFnSpec& f, const DomainSpec& domain) {
  Nat least{std::numeric_limits<std::uint64_t>::max()};
  for (int i = 1; i < domain.q; ++i)
    least = std::min(least, eval_f(f, Element(domain, static_cast<FieldElem>(i))));
  return {least, Certainty::Exact, RefineReason::ClosedFormField};
}

/// Number of nonzero multiples of a with g-value exactly `level`, or nullopt
/// when it cannot be counted in closed form. Saturates at uint64 max.
std::optional<std::uint64_t> multiples_at_level(const EuclideanFnSpec& g, const Element& a, Nat level) {
  const DomainSpec& dom = a.domain();
  const std::uint64_t L = level.value;
  switch (g.kind) {
    case FnKind::AbsValue: {
      const BigInt mag = abs(a.as_integer());
      return (L > 0 && BigInt(L) % mag == 0) ? 2 : 0;
    }
    case FnKind::Degree:
    case FnKind::PhiDeg: {
      std::uint64_t deg = L;
      if (g.kind == FnKind::PhiDeg) {
        auto it = std::find(g.phi.begin(), g.phi.end(), level);
        if (it == g.phi.end()) {
          if (g.phi.empty() || level > g.phi.back()) return std::nullopt;
          return 0;
        }
        deg = static_cast<std::uint64_t>(it - g.phi.begin());
      }
      const auto da = static_cast<std::uint64_t>(degree(a));
      if (deg < da) return 0;
      const std::uint64_t p = saturating_power(static_cast<std::uint64_t>(dom.q), deg - da);
      return p == std::numeric_limits<std::uint64_t>::max() ? p : p * static_cast<std::uint64_t>(dom.q - 1);
    }
    case FnKind::Order: {
      const auto oa = static_cast<std::uint64_t>(order(a));
      const auto T = static_cast<std::uint64_t>(dom.precision);
      if (L >= T) return std::nullopt;  // beyond the precision
      if (L < oa) return 0;
      return saturating_power(static_cast<std::uint64_t>(dom.q), T - L - 1) *
             static_cast<std::uint64_t>(dom.q - 1);
    }
    case FnKind::QuadNorm: {
      const auto shell = level_set(g, dom, level);
      if (!shell) return std::nullopt;
      std::uint64_t n = 0;
      for (const Element& m : *shell)
        if (divides(a, m)) ++n;
      return n;
    }
    default:
      return std::nullopt;
  }
}

/// min over multiples: exception values at multiples of a, and the lowest
/// g-level (scanning up from g(a), which bounds g(ab) from below) that
/// holds a multiple of a outside the exception set.
std::optional<CertifiedValue> monotone_bound(const EuclideanFnSpec& f, const Element& a) {
  EuclideanFnSpec g;
  g.kind = f.base;
  g.phi = f.phi;
  if (!is_strongly_builtin(g.kind)) return std::nullopt;
  if (g.kind == FnKind::QuadNorm && a.domain().d > 0) return std::nullopt;

  std::optional<Nat> best;
  std::map<Nat, std::uint64_t> excepted_per_level;
  for (const auto& [point, value] : f.exceptions) {
    if (!divides(a, point)) continue;
    if (!best || value < *best) best = value;
    try {
      ++excepted_per_level[eval_f(g, point)];
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  Nat level;
  try {
    level = eval_f(g, a);
  } catch (const Error&) {
    return std::nullopt;
  }
  for (std::uint64_t steps = 0; !best || level < *best; ++steps, level = Nat(level.value + 1)) {
    if (steps > kMaxLevels) return std::nullopt;
    const auto count = multiples_at_level(g, a, level);
    if (!count) return std::nullopt;
    const auto it = excepted_per_level.find(level);
    const std::uint64_t excepted = it == excepted_per_level.end() ? 0 : it->second;
    if (*count > excepted) {
      best = level;
      break;
    }
    // A level past every exception that still has no multiples: the
    // remaining multiples live higher up, keep scanning.
  }
  return CertifiedValue{*best, Certainty::Exact, RefineReason::MonotoneBound};
}

CertifiedValue bounded_search(const EuclideanFnSpec& f, const Element& a, const std::optional<Window>& window) {
  if (!window) throw Error(ErrorCode::WindowRequired, "refining f at " + render(a) + " needs a search window");
  std::optional<Nat> best;
  for (const Element& b : enumerate_nonzero(a.domain(), *window)) {
    const Element ab = a * b;
    if (ab.is_zero()) continue;
    try {
      const Nat v = eval_f(f, ab);
      if (!best || v < *best) best = v;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RangeExceeded && e.code() != ErrorCode::PrecisionExhausted) throw;
    }
  }
  if (!best)
    throw Error(ErrorCode::PrecisionExhausted, "no multiple of " + render(a) + " in the window could be evaluated");
  return {*best, Certainty::UpperBound, RefineReason::BoundedSearch};
}

}  // namespace

std::string_view to_string(Certainty c) { return c == Certainty::Exact ? "Exact" : "UpperBound"; }

std::string_view to_string(RefineReason r) {
  for (const auto& [k, s] : kReasons)
    if (k == r) return s;
  return "?";
}

std::optional<Certainty> certainty_from_string(std::string_view s) {
  if (s == "Exact") return Certainty::Exact;
  if (s == "UpperBound") return Certainty::UpperBound;
  return std::nullopt;
}

std::optional<RefineReason> reason_from_string(std::string_view s) {
  for (const auto& [k, name] : kReasons)
    if (name == s) return k;
  return std::nullopt;
}

CertifiedValue refine_eval(const EuclideanFnSpec& f, const Element& a, const RefineStrategy& strategy) {
  if (a.is_zero()) throw Error(ErrorCode::EvalAtZero, "f~ is not defined at 0");
  require_compatible(f, a.domain());
  if (strategy.bounded) return bounded_search(f, a, strategy.window);
  if (a.domain().is_field()) return closed_form_field(f, a.domain());
  if (is_strongly_builtin(f.kind)) return {eval_f(f, a), Certainty::Exact, RefineReason::FixedPointStrong};
  if (f.kind == FnKind::ExceptionTable)
    if (auto v = monotone_bound(f, a)) return *v;
  return bounded_search(f, a, strategy.window);
}

Refiner::Refiner(EuclideanFnSpec f, RefineStrategy strategy) : f_(std::move(f)), strategy_(std::move(strategy)) {}

CertifiedValue Refiner::operator()(const Element& a) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(a); it != cache_.end()) return it->second;
  }
  const CertifiedValue v = refine_eval(f_, a, strategy_);
  std::lock_guard lock(mutex_);
  cache_.emplace(a, v);
  return v;
}

std::optional<Nat> Refiner::exact(const Element& a) const {
  if (a.is_zero()) return std::nullopt;
  try {
    const CertifiedValue v = (*this)(a);
    if (v.exact()) return v.value;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RangeExceeded && e.code() != ErrorCode::PrecisionExhausted) throw;
  }
  return std::nullopt;
}

namespace {

RefinementTable build_table(const Refiner& refiner, const DomainSpec& domain, const Window& window) {
  RefinementTable table{domain, window, {}, true};
  const std::vector<Element> elems = enumerate_nonzero(domain, window);
  std::vector<std::optional<CertifiedValue>> values(elems.size());
  parallel_for(elems.size(), [&](std::size_t i) { values[i] = refiner(elems[i]); });
  table.entries.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    table.all_exact = table.all_exact && values[i]->exact();
    table.entries.emplace_back(elems[i], *values[i]);
  }
  return table;
}

}  // namespace

RefinementTable refine_function(const EuclideanFnSpec& f, const DomainSpec& domain, const Window& window,
                                const RefineStrategy& strategy) {
  validate(domain, window);
  require_compatible(f, domain);
  RefineStrategy s = strategy;
  if (!s.window) s.window = window;
  return build_table(Refiner(f, s), domain, window);
}

RefinementReport check_refinement_properties(const EuclideanFnSpec& f, const DomainSpec& domain,
                                             const Window& window) {
  validate(domain, window);
  require_compatible(f, domain);
  const Refiner refiner(f, RefineStrategy::automatic(window));
  const Valuation exact = [&refiner](const Element& a) { return refiner.exact(a); };

  RefinementReport out;
  out.table = build_table(refiner, domain, window);
  out.strongly = check_strongly(exact, domain, window);
  out.ultra = check_ultra(exact, domain, window);
  out.f_strongly = check_property(Property::StronglyEuclidean, f, domain, window);

  PropertyReport& fp = out.fixed_point;
  fp.property = Property::RefinementFixedPoint;
  fp.domain = domain;
  fp.window = window;
  fp.fn = f;
  for (const auto& [a, v] : out.table.entries) {
    if (!v.exact()) {
      ++fp.pairs_skipped;
      continue;
    }
    ++fp.pairs_checked;
    const Nat fa = eval_f(f, a);
    if (v.value != fa && fp.witnesses.empty())
      fp.witnesses.push_back(Witness{{a}, {v.value, fa}, {}, "f~(" + render(a) + ") != f(" + render(a) + ")"});
  }
  if (!fp.witnesses.empty()) {
    fp.verdict = Verdict::Violated;
  } else if (window_is_exhaustive(domain) && fp.pairs_skipped == 0) {
    fp.verdict = Verdict::ExhaustivelyVerified;
  } else {
    fp.verdict = Verdict::NoViolationFound;
  }

  // f strongly violated at (a, b) forces f~(a) <= f(ab) < f(a), so a strongly
  // witness inside the window must show up as a fixed-point mismatch.
  ConsistencyFlag& flag = out.fixed_point_flag;
  flag.relation = "f~ = f <=> strongly";
  if (out.f_strongly.violated() && !fp.violated()) {
    const bool certain = fp.pairs_skipped == 0;
    flag.status = certain ? Consistency::TheoremContradiction : Consistency::Inconclusive;
    flag.detail = "f is not strongly Euclidean but f~ = f on every exact window value";
  } else if (fp.violated() && out.f_strongly.verdict == Verdict::ExhaustivelyVerified) {
    flag.status = Consistency::TheoremContradiction;
    flag.detail = "f~ != f although f is strongly Euclidean";
  } else if (fp.violated() && !out.f_strongly.violated()) {
    flag.status = Consistency::Inconclusive;
    flag.detail = "f~ != f; the strongly witness lies outside the window";
  } else {
    flag.status = Consistency::Consistent;
    flag.detail = fp.violated() ? "f~ != f and f is not strongly Euclidean" : "f~ = f and f is strongly Euclidean";
  }
  return out;
}

}  // namespace euclid
