#include "euclid/property_lab.hpp"

#include <atomic>
#include <limits>

#include "euclid/division.hpp"
#include "euclid/enumerate.hpp"
#include "euclid/errors.hpp"
#include "euclid/notation.hpp"
#include "euclid/parallel.hpp"

namespace euclid {

namespace {

enum class Outcome { Excluded, Checked, Skipped, Violated };

struct PairResult {
  Outcome outcome = Outcome::Checked;
  std::optional<Witness> witness;
};

PairResult ok() { return {Outcome::Checked, std::nullopt}; }
PairResult skip() { return {Outcome::Skipped, std::nullopt}; }
PairResult excluded() { return {Outcome::Excluded, std::nullopt}; }
PairResult violation(Witness w) { return {Outcome::Violated, std::move(w)}; }

bool undecidable(const Error& e) {
  return e.code() == ErrorCode::RangeExceeded || e.code() == ErrorCode::PrecisionExhausted;
}

std::optional<Nat> try_eval(const EuclideanFnSpec& f, const Element& a) {
  if (a.is_zero()) return std::nullopt;
  try {
    return eval_f(f, a);
  } catch (const Error& e) {
    if (undecidable(e)) return std::nullopt;
    throw;
  }
}

Verdict settle(const PropertyReport& r) {
  if (!r.witnesses.empty()) return Verdict::Violated;
  if (window_is_exhaustive(r.domain) && r.pairs_skipped == 0) return Verdict::ExhaustivelyVerified;
  return Verdict::NoViolationFound;
}

struct Row {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::vector<Witness> witnesses;
};

/// Runs pair(a_i, b_j) over rows in parallel. Without collect_all, rows
/// after the earliest violating row are abandoned; rows before it always
/// run to completion, so the merged first witness is schedule-independent.
template <class PairFn>
void run_pairs(PropertyReport& report, const std::vector<Element>& as, const std::vector<Element>& bs,
               const CheckOptions& options, PairFn pair) {
  std::vector<Row> rows(as.size());
  std::atomic<std::size_t> first_bad{std::numeric_limits<std::size_t>::max()};
  parallel_for(as.size(), [&](std::size_t i) {
    if (!options.collect_all && i > first_bad.load()) return;
    Row& row = rows[i];
    for (const Element& b : bs) {
      PairResult r = pair(as[i], b);
      switch (r.outcome) {
        case Outcome::Excluded: break;
        case Outcome::Checked: ++row.checked; break;
        case Outcome::Skipped: ++row.skipped; break;
        case Outcome::Violated:
          ++row.checked;
          row.witnesses.push_back(std::move(*r.witness));
          break;
      }
      if (!options.collect_all && !row.witnesses.empty()) {
        std::size_t cur = first_bad.load();
        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  });
  for (Row& row : rows) {
    report.pairs_checked += row.checked;
    report.pairs_skipped += row.skipped;
    for (Witness& w : row.witnesses) report.witnesses.push_back(std::move(w));
    if (!options.collect_all && !report.witnesses.empty()) break;
  }
  report.verdict = settle(report);
}

PropertyReport blank(Property p, const DomainSpec& domain, const Window& window) {
  PropertyReport r;
  r.property = p;
  r.domain = domain;
  r.window = window;
  return r;
}

std::vector<Element> with_zero_last(std::vector<Element> v, const DomainSpec& domain) {
  v.push_back(Element::zero(domain));
  return v;
}

PairResult euclidean_pair(const EuclideanFnSpec& f, const Window& window, const Element& a,
                          const Element& b) {
  try {
    const QuotientRemainder qr = canonical_divide(a, b);
    if (qr.r.is_zero() || eval_f(f, qr.r) < eval_f(f, b)) return ok();
  } catch (const Error& e) {
    if (!undecidable(e)) throw;
  }
  EnumerationResult res;
  try {
    res = enumerate_valid_divisions(f, a, b, window);
  } catch (const Error& e) {
    if (undecidable(e)) return skip();
    throw;
  }
  if (!res.divisions.empty()) return ok();
  if (!res.complete) return skip();
  return violation(Witness{{a, b}, {}, {}, "no valid division of " + render(a) + " by " + render(b)});
}

PairResult uniquely_pair(const EuclideanFnSpec& f, const Window& window, const Element& a,
                         const Element& b) {
  EnumerationResult res;
  try {
    res = enumerate_valid_divisions(f, a, b, window);
  } catch (const Error& e) {
    if (undecidable(e)) return skip();
    throw;
  }
  // Two valid divisions refute uniqueness even when the search was bounded.
  if (res.divisions.size() >= 2)
    return violation(Witness{{a, b}, {}, res.divisions,
                             std::to_string(res.divisions.size()) + " valid divisions of " + render(a) +
                                 " by " + render(b)});
  if (!res.complete) return skip();
  if (res.divisions.empty())
    return violation(Witness{{a, b}, {}, {}, "no valid division of " + render(a) + " by " + render(b)});
  return ok();
}

PairResult strongly_pair(const Valuation& value, const Element& a, const Element& b) {
  const Element ab = a * b;
  const auto fa = value(a);
  const auto fab = value(ab);
  if (!fa || !fab) return skip();
  if (*fa > *fab)
    return violation(Witness{{a, b, ab}, {*fa, *fab},
                             {}, "f(" + render(a) + ") > f(" + render(ab) + ")"});
  return ok();
}

PairResult ultra_pair(const Valuation& value, const Element& a, const Element& b) {
  const Element s = a + b;
  if (s.is_zero()) return a.domain().kind == DomainKind::SeriesRing ? skip() : excluded();
  const auto fa = value(a);
  const auto fb = value(b);
  const auto fs = value(s);
  if (!fa || !fb || !fs) return skip();
  if (*fs > std::max(*fa, *fb))
    return violation(Witness{{a, b, s}, {*fa, *fb, *fs}, {},
                             "f(" + render(s) + ") > max(f(" + render(a) + "), f(" + render(b) + "))"});
  return ok();
}

Valuation valuation_of(const EuclideanFnSpec& f) {
  return [f](const Element& a) { return try_eval(f, a); };
}

}  // namespace

PropertyReport check_property(Property property, const EuclideanFnSpec& f, const DomainSpec& domain,
                              const Window& window, CheckOptions options) {
  validate(domain, window);
  require_compatible(f, domain);
  const std::vector<Element> elems = enumerate_nonzero(domain, window);
  PropertyReport report;
  switch (property) {
    case Property::Euclidean:
      report = blank(property, domain, window);
      run_pairs(report, with_zero_last(elems, domain), elems, options,
                [&](const Element& a, const Element& b) { return euclidean_pair(f, window, a, b); });
      break;
    case Property::UniquelyEuclidean:
      report = blank(property, domain, window);
      run_pairs(report, with_zero_last(elems, domain), elems, options,
                [&](const Element& a, const Element& b) { return uniquely_pair(f, window, a, b); });
      break;
    case Property::StronglyEuclidean:
      report = check_strongly(valuation_of(f), domain, window, options);
      break;
    case Property::UltraEuclidean:
      report = check_ultra(valuation_of(f), domain, window, options);
      break;
    default:
      throw Error(ErrorCode::InvalidFunction,
                  std::string("check_property does not handle ") + std::string(to_string(property)));
  }
  report.fn = f;
  return report;
}

PropertyReport check_strongly(const Valuation& value, const DomainSpec& domain, const Window& window,
                              CheckOptions options) {
  validate(domain, window);
  const std::vector<Element> elems = enumerate_nonzero(domain, window);
  PropertyReport report = blank(Property::StronglyEuclidean, domain, window);
  run_pairs(report, elems, elems, options,
            [&](const Element& a, const Element& b) { return strongly_pair(value, a, b); });
  return report;
}

PropertyReport check_ultra(const Valuation& value, const DomainSpec& domain, const Window& window,
                           CheckOptions options) {
  validate(domain, window);
  const std::vector<Element> elems = enumerate_nonzero(domain, window);
  PropertyReport report = blank(Property::UltraEuclidean, domain, window);
  run_pairs(report, elems, elems, options,
            [&](const Element& a, const Element& b) { return ultra_pair(value, a, b); });
  return report;
}

UnitLemmaReport check_unit_lemmas(const EuclideanFnSpec& f, const DomainSpec& domain, const Window& window) {
  UnitLemmaReport out{blank(Property::UnitEquality, domain, window),
                      blank(Property::MinAtUnits, domain, window)};
  out.unit_equality.fn = f;
  out.min_at_units.fn = f;
  const PropertyReport strongly = check_property(Property::StronglyEuclidean, f, domain, window);
  if (strongly.violated()) {
    out.unit_equality.verdict = Verdict::NotApplicable;
    out.min_at_units.verdict = Verdict::NotApplicable;
    return out;
  }
  const std::vector<Element> elems = enumerate_nonzero(domain, window);

  run_pairs(out.unit_equality, elems, elems, CheckOptions{},
            [&](const Element& a, const Element& b) -> PairResult {
              const Element ab = a * b;
              const auto fa = try_eval(f, a);
              const auto fab = try_eval(f, ab);
              if (!fa || !fab) return skip();
              const bool equal = *fa == *fab;
              const bool unit = is_unit_known(b);
              if (equal == unit) return ok();
              return violation(Witness{{a, b, ab}, {*fa, *fab}, {},
                                       unit ? "f(a) != f(ab) for the unit " + render(b)
                                            : "f(a) = f(ab) for the non-unit " + render(b)});
            });

  PropertyReport& m = out.min_at_units;
  std::vector<std::optional<Nat>> values(elems.size());
  std::optional<Nat> least;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    values[i] = try_eval(f, elems[i]);
    if (values[i] && (!least || *values[i] < *least)) least = values[i];
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!values[i]) {
      ++m.pairs_skipped;
      continue;
    }
    ++m.pairs_checked;
    const bool at_min = *values[i] == *least;
    const bool unit = is_unit_known(elems[i]);
    if (at_min != unit && m.witnesses.empty())
      m.witnesses.push_back(Witness{{elems[i]}, {*values[i], *least}, {},
                                    unit ? "unit " + render(elems[i]) + " is not a minimizer"
                                         : "non-unit " + render(elems[i]) + " attains the minimum"});
  }
  m.verdict = settle(m);
  return out;
}

std::string_view to_string(Consistency c) {
  switch (c) {
    case Consistency::Consistent: return "Consistent";
    case Consistency::Inconclusive: return "Inconclusive";
    case Consistency::TheoremContradiction: return "TheoremContradiction";
  }
  return "?";
}

bool MatrixReport::has_contradiction() const {
  for (const auto& flag : flags)
    if (flag.status == Consistency::TheoremContradiction) return true;
  return false;
}

namespace {

bool fails(Verdict v) { return v == Verdict::Violated; }
bool holds(Verdict v) { return v == Verdict::NoViolationFound || v == Verdict::ExhaustivelyVerified; }
bool proven(Verdict v) { return v == Verdict::ExhaustivelyVerified; }

}  // namespace

std::vector<ConsistencyFlag> consistency_flags(Verdict euclidean, Verdict strongly, Verdict ultra,
                                               Verdict uniquely) {
  std::vector<ConsistencyFlag> flags;

  {
    ConsistencyFlag flag{"euclidean", Consistency::Consistent, "f is Euclidean on the window"};
    if (fails(euclidean)) {
      flag.status = Consistency::Inconclusive;
      flag.detail = "f is not Euclidean; the remaining relations presuppose it";
    }
    flags.push_back(flag);
  }

  {
    ConsistencyFlag flag{"uniquely => strongly", Consistency::Consistent, ""};
    if (holds(uniquely) && fails(strongly)) {
      flag.status = proven(uniquely) ? Consistency::TheoremContradiction : Consistency::Inconclusive;
      flag.detail = "uniquely holds on the window but strongly is violated";
    } else if (fails(uniquely)) {
      flag.detail = "uniquely is violated; nothing to check";
    } else {
      flag.detail = "strongly holds wherever uniquely does";
    }
    flags.push_back(flag);
  }

  {
    ConsistencyFlag flag{"uniquely <=> strongly and ultra", Consistency::Consistent, ""};
    if (fails(uniquely)) {
      if (fails(strongly) || fails(ultra)) {
        flag.detail = "both sides fail";
      } else if (proven(strongly) && proven(ultra)) {
        flag.status = Consistency::TheoremContradiction;
        flag.detail = "strongly and ultra are verified but uniquely is violated";
      } else {
        flag.status = Consistency::Inconclusive;
        flag.detail = "uniquely is violated; strongly and ultra show no violation on the window";
      }
    } else if (holds(uniquely)) {
      if (fails(strongly) || fails(ultra)) {
        flag.status = proven(uniquely) ? Consistency::TheoremContradiction : Consistency::Inconclusive;
        flag.detail = "uniquely holds on the window but strongly or ultra is violated";
      } else {
        flag.detail = "both sides hold on the window";
      }
    }
    flags.push_back(flag);
  }

  {
    ConsistencyFlag flag{"strongly => (uniquely <=> ultra)", Consistency::Consistent, ""};
    if (fails(strongly)) {
      flag.detail = "f is not strongly Euclidean; hypothesis not met";
    } else if (holds(strongly) && fails(uniquely) && holds(ultra)) {
      flag.status = proven(strongly) && proven(ultra) ? Consistency::TheoremContradiction
                                                      : Consistency::Inconclusive;
      flag.detail = "ultra holds on the window but uniquely is violated";
    } else if (holds(strongly) && holds(uniquely) && fails(ultra)) {
      flag.status = proven(strongly) && proven(uniquely) ? Consistency::TheoremContradiction
                                                         : Consistency::Inconclusive;
      flag.detail = "uniquely holds on the window but ultra is violated";
    } else {
      flag.detail = "uniquely and ultra agree";
    }
    flags.push_back(flag);
  }
  return flags;
}

MatrixReport theorem_matrix(const EuclideanFnSpec& f, const DomainSpec& domain, const Window& window) {
  MatrixReport m{check_property(Property::Euclidean, f, domain, window),
                 check_property(Property::StronglyEuclidean, f, domain, window),
                 check_property(Property::UltraEuclidean, f, domain, window),
                 check_property(Property::UniquelyEuclidean, f, domain, window),
                 {}};
  m.flags = consistency_flags(m.euclidean.verdict, m.strongly.verdict, m.ultra.verdict, m.uniquely.verdict);
  return m;
}

namespace {

/// A witness may omit derived elements and values; those it records must agree.
bool recorded(const Witness& w, std::size_t i, const Element& expected) {
  return w.elements.size() <= i || w.elements[i] == expected;
}

bool values_match(const Witness& w, const std::vector<Nat>& expected) {
  return w.values.empty() || w.values == expected;
}

}  // namespace

bool replay_witness(const PropertyReport& report) {
  if (!report.violated() || !report.fn || report.witnesses.empty()) return false;
  const EuclideanFnSpec& f = *report.fn;
  const Witness& w = report.witnesses.front();
  try {
    switch (report.property) {
      case Property::StronglyEuclidean: {
        if (w.elements.size() < 2) return false;
        const Element& a = w.elements[0];
        const Element ab = a * w.elements[1];
        if (ab.is_zero() || !recorded(w, 2, ab)) return false;
        const Nat fa = eval_f(f, a), fab = eval_f(f, ab);
        return fa > fab && values_match(w, {fa, fab});
      }
      case Property::UltraEuclidean: {
        if (w.elements.size() < 2) return false;
        const Element& a = w.elements[0];
        const Element& b = w.elements[1];
        const Element s = a + b;
        if (s.is_zero() || !recorded(w, 2, s)) return false;
        const Nat fa = eval_f(f, a), fb = eval_f(f, b), fs = eval_f(f, s);
        return fs > std::max(fa, fb) && values_match(w, {fa, fb, fs});
      }
      case Property::UniquelyEuclidean: {
        if (w.elements.size() < 2) return false;
        if (w.divisions.empty()) {
          const auto res = enumerate_valid_divisions(f, w.elements[0], w.elements[1], report.window);
          return res.complete && res.divisions.empty();
        }
        if (w.divisions.size() < 2) return false;
        for (std::size_t i = 0; i < w.divisions.size(); ++i) {
          const auto& d = w.divisions[i];
          if (!(d.a == w.elements[0] && d.b == w.elements[1])) return false;
          if (!is_valid_division(f, d.a, d.b, d.q, d.r)) return false;
          for (std::size_t j = 0; j < i; ++j)
            if (w.divisions[j].q == d.q && w.divisions[j].r == d.r) return false;
        }
        return true;
      }
      case Property::Euclidean: {
        if (w.elements.size() < 2) return false;
        const auto res = enumerate_valid_divisions(f, w.elements[0], w.elements[1], report.window);
        return res.complete && res.divisions.empty();
      }
      case Property::UnitEquality: {
        if (w.elements.size() < 2) return false;
        const Element& a = w.elements[0];
        const Element& b = w.elements[1];
        return (eval_f(f, a) == eval_f(f, a * b)) != is_unit_known(b);
      }
      case Property::MinAtUnits: {
        if (w.elements.empty() || w.values.size() < 2) return false;
        const Nat v = eval_f(f, w.elements[0]);
        return v == w.values[0] && (v == w.values[1]) != is_unit_known(w.elements[0]);
      }
      default:
        return false;
    }
  } catch (const Error&) {
    return false;
  }
}

}  // namespace euclid
