#include "euclid/decomposition.hpp"

#include "euclid/enumerate.hpp"
#include "euclid/notation.hpp"

namespace euclid {

namespace {

bool in_unit_field(const Element& e) { return e.is_zero() || is_unit_known(e); }

}  // namespace

Decomposition decompose_by(const EuclideanFnSpec& f, const Element& a, const Element& x,
                           const std::optional<Window>& window) {
  require_same_domain(a, x);
  require_compatible(f, a.domain());
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "decomposition base is 0");
  if (is_unit_known(x))
    throw Error(ErrorCode::InvalidFunction, "decomposition base " + render(x) + " is a unit");

  Decomposition out{x, {}};
  Element current = a;
  while (!current.is_zero()) {
    const EnumerationResult step = enumerate_valid_divisions(f, current, x, window);
    if (step.divisions.size() != 1 || !step.complete)
      throw DecompositionError(ErrorCode::NonUniqueStep,
                               render(current) + " has " + std::to_string(step.divisions.size()) +
                                   (step.complete ? "" : " (incomplete search)") +
                                   " valid divisions by " + render(x),
                               current);
    const CandidateDivision& div = step.divisions.front();
    if (!in_unit_field(div.r))
      throw DecompositionError(ErrorCode::NonUnitRemainder,
                               "remainder " + render(div.r) + " is neither zero nor a unit", div.r);
    out.coefficients.push_back(div.r);
    if (in_unit_field(div.q)) {
      if (!div.q.is_zero()) out.coefficients.push_back(div.q);
      break;
    }
    if (!(eval_f(f, div.q) < eval_f(f, current)))
      throw DecompositionError(ErrorCode::NoDescent,
                               "f(" + render(div.q) + ") does not drop below f(" + render(current) + ")",
                               current);
    current = div.q;
  }
  return out;
}

Element horner(const Decomposition& d) {
  Element acc = Element::zero(d.base.domain());
  for (auto it = d.coefficients.rbegin(); it != d.coefficients.rend(); ++it) acc = acc * d.base + *it;
  return acc;
}

PropertyReport unit_field_closure(const DomainSpec& domain, const Window& window) {
  PropertyReport report;
  report.property = Property::UnitFieldClosure;
  report.domain = domain;
  report.window = window;
  const auto units = units_in_window(domain, window);
  for (const Element& u : units) {
    for (const Element& v : units) {
      const Element s = u + v;
      if (s.is_zero()) {
        // A vanishing residue may hide a nonzero non-unit of order >= T.
        if (domain.kind == DomainKind::SeriesRing) ++report.pairs_skipped;
        continue;
      }
      ++report.pairs_checked;
      if (!is_unit_known(s) && report.witnesses.empty())
        report.witnesses.push_back(Witness{{u, v, s}, {}, {}, render(u) + " + " + render(v) + " = " +
                                                               render(s) + " is not a unit"});
    }
  }
  if (!report.witnesses.empty()) {
    report.verdict = Verdict::Violated;
  } else if (window_is_exhaustive(domain) && report.pairs_skipped == 0) {
    report.verdict = Verdict::ExhaustivelyVerified;
  } else {
    report.verdict = Verdict::NoViolationFound;
  }
  return report;
}

}  // namespace euclid
