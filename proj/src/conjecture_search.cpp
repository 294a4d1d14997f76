#include "euclid/conjecture_search.hpp"

#include <array>
#include <functional>
#include <set>
#include <string>

#include "euclid/enumerate.hpp"
#include "euclid/errors.hpp"
#include "euclid/notation.hpp"
#include "euclid/parallel.hpp"
#include "euclid/property_lab.hpp"

namespace euclid {

namespace {

constexpr std::array<std::pair<Stage, std::string_view>, 5> kStages{{
    {Stage::NotEuclidean, "NotEuclidean"},
    {Stage::NotUltra, "NotUltra"},
    {Stage::Strongly, "Strongly"},
    {Stage::RefinementUltra, "RefinementUltra"},
    {Stage::Survivor, "Survivor"},
}};

/// Collects generated functions, dropping duplicates, until the budget is hit.
class Sink {
 public:
  explicit Sink(std::uint64_t budget) : budget_(budget) {}

  bool full() const { return out_.size() >= budget_; }

  void add(EuclideanFnSpec f) {
    if (full()) return;
    if (seen_.insert(key(f)).second) out_.push_back(std::move(f));
  }

  std::vector<EuclideanFnSpec> take() { return std::move(out_); }

 private:
  static std::string key(const EuclideanFnSpec& f) {
    std::string k = std::string(to_string(f.kind)) + "/" + std::string(to_string(f.base)) + "/";
    for (const Nat& v : f.phi) k += std::to_string(v.value) + ",";
    k += "/" + std::to_string(f.field_q) + "/";
    for (const auto& [e, v] : f.table) k += std::to_string(e) + ":" + std::to_string(v.value) + ",";
    k += "/";
    for (const auto& [e, v] : f.exceptions) k += render(e) + ":" + std::to_string(v.value) + ",";
    return k;
  }

  std::uint64_t budget_;
  std::vector<EuclideanFnSpec> out_;
  std::set<std::string> seen_;
};

/// Calls visit(indices) for every c-subset of {0..n-1} in lexicographic
/// order, stopping early once visit returns false.
bool for_each_subset(std::size_t n, std::size_t c, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (c > n) return true;
  std::vector<std::size_t> idx(c);
  for (std::size_t i = 0; i < c; ++i) idx[i] = i;
  for (;;) {
    if (!visit(idx)) return false;
    std::size_t i = c;
    while (i > 0 && idx[i - 1] == n - c + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < c; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Odometer over choices[0] x choices[1] x ..., last position fastest.
bool for_each_product(const std::vector<std::vector<Nat>>& choices,
                      const std::function<bool(const std::vector<Nat>&)>& visit) {
  for (const auto& c : choices)
    if (c.empty()) return true;
  std::vector<std::size_t> pos(choices.size(), 0);
  std::vector<Nat> cur(choices.size());
  for (;;) {
    for (std::size_t i = 0; i < choices.size(); ++i) cur[i] = choices[i][pos[i]];
    if (!visit(cur)) return false;
    std::size_t i = choices.size();
    while (i > 0 && ++pos[i - 1] == choices[i - 1].size()) pos[--i] = 0;
    if (i == 0) return true;
  }
}

std::vector<Nat> values_except(std::uint64_t max_value, std::optional<Nat> skip) {
  std::vector<Nat> out;
  for (std::uint64_t v = 0; v <= max_value; ++v)
    if (!skip || skip->value != v) out.emplace_back(v);
  return out;
}

/// Adds base-with-exceptions functions for 1..budget points drawn from
/// `points`, each overridden with a value different from the base value.
void perturb(Sink& sink, const EuclideanFnSpec& base, const std::vector<Element>& points,
             std::uint64_t max_value, std::uint64_t count) {
  for_each_subset(points.size(), count, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Nat>> choices;
    for (std::size_t i : idx) choices.push_back(values_except(max_value, eval_f(base, points[i])));
    return for_each_product(choices, [&](const std::vector<Nat>& values) {
      std::vector<std::pair<Element, Nat>> exc;
      for (std::size_t k = 0; k < idx.size(); ++k) exc.emplace_back(points[idx[k]], values[k]);
      sink.add(EuclideanFnSpec::with_exceptions(base, std::move(exc)));
      return !sink.full();
    });
  });
}

void generate(Sink& sink, const DomainSpec& domain, const AllFieldTables& g) {
  if (domain.kind != DomainKind::FiniteField)
    throw Error(ErrorCode::InvalidDomain, "AllFieldTables needs a finite field");
  std::vector<std::vector<Nat>> choices(static_cast<std::size_t>(domain.q - 1), values_except(g.max_value, {}));
  for_each_product(choices, [&](const std::vector<Nat>& values) {
    std::map<FieldElem, Nat> table;
    for (std::size_t i = 0; i < values.size(); ++i) table[static_cast<FieldElem>(i + 1)] = values[i];
    sink.add(EuclideanFnSpec::field_table(domain.q, std::move(table)));
    return !sink.full();
  });
}

void generate(Sink& sink, const DomainSpec& domain, const PhiDegPerturbations& g) {
  if (domain.kind != DomainKind::PolyRing)
    throw Error(ErrorCode::InvalidDomain, "PhiDegPerturbations needs a polynomial ring");
  std::vector<Element> points;
  const std::uint64_t n_points = window_size(domain, Window::degree(static_cast<std::int64_t>(g.exception_max_degree)));
  for (std::uint64_t i = 1; i <= n_points; ++i) points.push_back(element_from_index(domain, i));

  // Strictly increasing phi on 0..max_degree with values in 0..max_value.
  std::vector<std::vector<Nat>> phis;
  for_each_subset(g.max_value + 1, g.max_degree + 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<Nat> phi;
    for (std::size_t v : idx) phi.emplace_back(v);
    for (std::uint64_t k = g.max_degree + 1; k <= 2 * g.max_degree; ++k) phi.emplace_back(phi.back().value + 1);
    phis.push_back(std::move(phi));
    return true;
  });
  for (std::uint64_t count = 1; count <= g.exception_budget && !sink.full(); ++count)
    for (const auto& phi : phis) {
      if (sink.full()) break;
      perturb(sink, EuclideanFnSpec::phi_deg(phi), points, g.max_value, count);
    }
}

void generate(Sink& sink, const DomainSpec& domain, const IntegerPerturbations& g) {
  if (domain.kind != DomainKind::Integers)
    throw Error(ErrorCode::InvalidDomain, "IntegerPerturbations needs the integers");
  const std::vector<Element> points = enumerate_nonzero(domain, Window::magnitude(static_cast<std::int64_t>(g.M)));
  for (std::uint64_t count = 1; count <= g.exception_budget && !sink.full(); ++count)
    perturb(sink, EuclideanFnSpec::abs_value(), points, g.max_value, count);
}

}  // namespace

std::string_view to_string(Stage s) {
  for (const auto& [k, name] : kStages)
    if (k == s) return name;
  return "?";
}

std::optional<Stage> stage_from_string(std::string_view s) {
  for (const auto& [k, name] : kStages)
    if (name == s) return k;
  return std::nullopt;
}

std::vector<EuclideanFnSpec> enumerate_family(const FamilySpec& family) {
  if (family.budget == 0) throw Error(ErrorCode::BudgetZero, "family budget is 0");
  validate(family.domain);
  Sink sink(family.budget);
  std::visit([&](const auto& g) { generate(sink, family.domain, g); }, family.generator);
  return sink.take();
}

CandidateRecord classify(const EuclideanFnSpec& f, const DomainSpec& domain, const Window& window,
                         std::uint64_t index) {
  CandidateRecord rec;
  rec.index = index;
  rec.fn = f;

  const PropertyReport e = check_property(Property::Euclidean, f, domain, window);
  rec.euclidean = e.verdict;
  if (e.violated()) {
    rec.stage = Stage::NotEuclidean;
    rec.witness = e.witnesses.front();
    return rec;
  }
  const PropertyReport u = check_property(Property::UltraEuclidean, f, domain, window);
  rec.ultra = u.verdict;
  if (u.violated()) {
    rec.stage = Stage::NotUltra;
    rec.witness = u.witnesses.front();
    return rec;
  }
  const PropertyReport s = check_property(Property::StronglyEuclidean, f, domain, window);
  rec.strongly = s.verdict;
  if (!s.violated()) {
    rec.stage = Stage::Strongly;
    return rec;
  }
  rec.witness = s.witnesses.front();
  const RefinementReport r = check_refinement_properties(f, domain, window);
  rec.refinement_strongly = r.strongly.verdict;
  rec.refinement_ultra = r.ultra.verdict;
  rec.refinement_exact = r.table.all_exact;
  if (r.ultra.violated()) {
    rec.stage = Stage::Survivor;
    rec.witness = r.ultra.witnesses.front();
  } else {
    rec.stage = Stage::RefinementUltra;
  }
  return rec;
}

namespace {

void tally(SearchReport& report, CandidateRecord rec) {
  ++report.functions_examined;
  switch (rec.stage) {
    case Stage::NotEuclidean: ++report.rejected_euclidean; break;
    case Stage::NotUltra: ++report.rejected_ultra; break;
    case Stage::Strongly: ++report.rejected_strongly; break;
    case Stage::Survivor:
      report.candidates.push_back(rec);
      report.stage2.push_back(std::move(rec));
      break;
    case Stage::RefinementUltra: report.stage2.push_back(std::move(rec)); break;
  }
}

}  // namespace

SearchReport run_search(const FamilySpec& family, const Window& window) {
  const auto start = std::chrono::steady_clock::now();
  validate(family.domain, window);
  const std::vector<EuclideanFnSpec> fns = enumerate_family(family);
  std::vector<std::optional<CandidateRecord>> records(fns.size());
  parallel_for(fns.size(), [&](std::size_t i) { records[i] = classify(fns[i], family.domain, window, i); });

  SearchReport report;
  report.domain = family.domain;
  report.window = window;
  for (auto& rec : records) tally(report, std::move(*rec));
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

SearchReport verify_candidate(const EuclideanFnSpec& f, const DomainSpec& domain, const Window& window,
                              CandidateRecord* record) {
  const auto start = std::chrono::steady_clock::now();
  validate(domain, window);
  require_compatible(f, domain);
  SearchReport report;
  report.domain = domain;
  report.window = window;
  CandidateRecord rec = classify(f, domain, window);
  if (record) *record = rec;
  tally(report, std::move(rec));
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace euclid
