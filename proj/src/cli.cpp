#include "euclid/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <toml.hpp>

#include "euclid/conjecture_search.hpp"
#include "euclid/decomposition.hpp"
#include "euclid/division.hpp"
#include "euclid/errors.hpp"
#include "euclid/json_io.hpp"
#include "euclid/notation.hpp"
#include "euclid/property_lab.hpp"
#include "euclid/refinement.hpp"

namespace euclid {

namespace {

constexpr const char* kSyntaxHelp = R"(Element syntax:
  Z          -7, 12
  quad       3-2*sqrt(2), 1/2+1/2*sqrt(-3); for d = -1 also 2-i
  field      0..q-1 as integers; in F4 also a (alpha) and b (beta = alpha+1)
  poly       x^3+x+1, 2*x^2+1, a*x+b (coefficients in F_q, '*' optional)
  series     1+x+x^3 or 1+x+O(x^8); terms at or above the precision are dropped
Function syntax:
  --fn abs | deg | ord | norm             built-in functions
  --fn phi --phi 1,2,3,4                  phi(deg p), phi strictly increasing
  --fn table --table 1:0,a:1,b:1          finite-field table
  --fn exc --base-fn abs --exceptions 3:9,-3:9
Exit codes: 0 ok, 1 violation/finding, 2 usage error, 3 inconclusive.)";

struct Options {
  std::string domain = "Z";
  int d = -1;
  int q = 2;
  int precision = 8;
  std::string fn, phi, table, base_fn, exceptions;
  std::string a, b, base;
  std::int64_t bound = -1;
  std::string format = "text";
  bool all = false;
  bool timing = false;
  std::string property = "euclidean";
  // search
  std::string config, family = "fields";
  std::uint64_t max_value = 1, max_degree = 3, exception_budget = 1, exception_max_degree = 0, M = 6,
                budget = 10000;
  std::int64_t verify_window = -1;
  bool candidate = false;
};

struct Outcome {
  int code = kExitOk;
  Json result;
  std::string text;
};

struct Context {
  DomainSpec domain;
  EuclideanFnSpec f;
  Window window;
  Json args = Json::object();
};

// ---------------------------------------------------------------- parsing

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::uint64_t parse_nat(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used == s.size() && s.find('-') == std::string::npos) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "expected a non-negative integer, got '" + s + "'");
}

std::pair<std::string, Nat> split_entry(const std::string& entry) {
  const auto colon = entry.rfind(':');
  if (colon == std::string::npos || colon == 0)
    throw Error(ErrorCode::ParseError, "expected element:value, got '" + entry + "'");
  return {entry.substr(0, colon), Nat(parse_nat(entry.substr(colon + 1)))};
}

DomainSpec make_domain(const Options& o) {
  if (o.domain == "Z") return DomainSpec::integers();
  if (o.domain == "quad") return DomainSpec::quadratic(o.d);
  if (o.domain == "field") return DomainSpec::finite_field(o.q);
  if (o.domain == "poly") return DomainSpec::poly(o.q);
  if (o.domain == "series") return DomainSpec::series(o.q, o.precision);
  throw Error(ErrorCode::InvalidDomain, "unknown domain '" + o.domain + "' (expected Z, quad, field, poly, series)");
}

Window default_window(const DomainSpec& d) {
  switch (d.kind) {
    case DomainKind::Integers: return Window::magnitude(50);
    case DomainKind::QuadraticRing: return Window::magnitude(20);
    case DomainKind::PolyRing: return Window::degree(6);
    default: return Window::whole();
  }
}

std::vector<Nat> parse_phi(const std::string& s) {
  std::vector<Nat> phi;
  for (const auto& part : split(s, ',')) phi.emplace_back(parse_nat(part));
  return phi;
}

EuclideanFnSpec builtin(std::string_view name, const Options& o, const DomainSpec& domain) {
  const auto kind = fn_kind_from_name(name);
  if (!kind) throw Error(ErrorCode::InvalidFunction, "unknown function '" + std::string(name) + "'");
  switch (*kind) {
    case FnKind::AbsValue: return EuclideanFnSpec::abs_value();
    case FnKind::Degree: return EuclideanFnSpec::degree();
    case FnKind::Order: return EuclideanFnSpec::order();
    case FnKind::QuadNorm: return EuclideanFnSpec::quad_norm();
    case FnKind::PhiDeg:
      if (o.phi.empty()) throw Error(ErrorCode::InvalidFunction, "--fn phi needs --phi");
      return EuclideanFnSpec::phi_deg(parse_phi(o.phi));
    case FnKind::FieldTable: {
      if (!domain.is_field()) throw Error(ErrorCode::IncompatibleFunction, "--fn table needs --domain field");
      std::map<FieldElem, Nat> table;
      for (const auto& entry : split(o.table, ',')) {
        const auto [key, value] = split_entry(entry);
        table[parse_element(domain, key).as_field()] = value;
      }
      return EuclideanFnSpec::field_table(domain.q, std::move(table));
    }
    case FnKind::ExceptionTable: {
      const EuclideanFnSpec base =
          o.base_fn.empty() ? default_function(domain) : builtin(o.base_fn, o, domain);
      std::vector<std::pair<Element, Nat>> exc;
      for (const auto& entry : split(o.exceptions, ',')) {
        const auto [key, value] = split_entry(entry);
        exc.emplace_back(parse_element(domain, key), value);
      }
      return EuclideanFnSpec::with_exceptions(base, std::move(exc));
    }
  }
  throw Error(ErrorCode::InvalidFunction, "unknown function '" + std::string(name) + "'");
}

Context make_context(const Options& o) {
  Context c{make_domain(o), {}, {}, Json::object()};
  c.f = o.fn.empty() ? default_function(c.domain) : builtin(o.fn, o, c.domain);
  require_compatible(c.f, c.domain);
  c.window = o.bound >= 0 ? Window{o.bound} : default_window(c.domain);
  validate(c.domain, c.window);
  c.args["domain"] = to_json(c.domain);
  c.args["function"] = to_json(c.f);
  c.args["window"] = c.window.bound;
  c.args["window_description"] = describe(c.domain, c.window);
  return c;
}

Element required_element(const Context& c, const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorCode::ParseError, std::string("missing ") + flag);
  return parse_element(c.domain, text);
}

// ---------------------------------------------------------------- text

std::string pretty(const Element& e) { return render(e, Notation::Pretty); }

std::string factor(const Element& e) {
  const std::string s = pretty(e);
  return s.find_first_of("+-", 1) != std::string::npos || s.front() == '-' ? "(" + s + ")" : s;
}

std::string division_text(const Element& a, const Element& b, const Element& q, const Element& r) {
  return pretty(a) + " = " + factor(q) + "·" + factor(b) + " + " + factor(r);
}

std::string verdict_text(Verdict v) { return snake_case(to_string(v)); }

std::string report_text(const PropertyReport& r) {
  std::string s = snake_case(to_string(r.property)) + " on " + describe(r.domain, r.window) + ": " +
                  verdict_text(r.verdict) + " (checked " + std::to_string(r.pairs_checked) + ", skipped " +
                  std::to_string(r.pairs_skipped) + ")\n";
  for (const auto& w : r.witnesses) {
    s += "  witness:";
    for (const auto& e : w.elements) s += " " + pretty(e);
    if (!w.values.empty()) {
      s += "  values:";
      for (const Nat& v : w.values) s += " " + std::to_string(v.value);
    }
    s += "  (" + w.note + ")\n";
    for (const auto& d : w.divisions) s += "    " + division_text(d.a, d.b, d.q, d.r) + "\n";
  }
  return s;
}

int report_code(const PropertyReport& r) {
  if (r.violated()) return kExitFinding;
  if (r.pairs_skipped > 0) return kExitInconclusive;
  return kExitOk;
}

int combine(int a, int b) {
  if (a == kExitFinding || b == kExitFinding) return kExitFinding;
  if (a == kExitInconclusive || b == kExitInconclusive) return kExitInconclusive;
  return kExitOk;
}

std::string certified_text(const CertifiedValue& v) {
  return std::to_string(v.value.value) + " [" + std::string(to_string(v.certainty)) + ", " +
         std::string(to_string(v.reason)) + "]";
}

// ---------------------------------------------------------------- commands

Outcome cmd_divide(const Context& c, const Options& o) {
  const Element a = required_element(c, o.a, "--a");
  const Element b = required_element(c, o.b, "--b");
  const QuotientRemainder qr = canonical_divide(a, b);
  const CandidateDivision div = make_division(c.f, a, b, qr.q, qr.r);
  Outcome out{kExitOk, to_json(div), ""};
  out.text = division_text(a, b, qr.q, qr.r) + (div.valid ? "  (valid under " : "  (not valid under ") +
             describe(c.f) + ")\n";
  return out;
}

Outcome cmd_enumerate(const Context& c, const Options& o) {
  const Element a = required_element(c, o.a, "--a");
  const Element b = required_element(c, o.b, "--b");
  const EnumerationResult res = enumerate_valid_divisions(c.f, a, b, c.window);
  Outcome out{res.complete ? kExitOk : kExitInconclusive, to_json(res), ""};
  for (const auto& d : res.divisions) out.text += division_text(d.a, d.b, d.q, d.r) + "\n";
  out.text += std::to_string(res.divisions.size()) + " valid division(s); search " +
              (res.complete ? "complete" : "bounded by the window") + "\n";
  return out;
}

Outcome cmd_gcd(const Context& c, const Options& o) {
  const Element a = required_element(c, o.a, "--a");
  const Element b = required_element(c, o.b, "--b");
  const GcdResult g = gcd_extended(a, b);
  Outcome out{kExitOk, Json{{"g", to_json(g.g)}, {"s", to_json(g.s)}, {"t", to_json(g.t)}}, ""};
  out.text = "gcd = " + pretty(g.g) + " = " + factor(g.s) + "·" + factor(a) + " + " + factor(g.t) + "·" +
             factor(b) + "\n";
  return out;
}

Outcome cmd_check(const Context& c, const Options& o) {
  const CheckOptions opts{o.all};
  const std::string& p = o.property;
  auto single = [&](Property prop) {
    const PropertyReport r = check_property(prop, c.f, c.domain, c.window, opts);
    return Outcome{report_code(r), to_json(r), report_text(r)};
  };
  if (p == "euclidean") return single(Property::Euclidean);
  if (p == "strongly") return single(Property::StronglyEuclidean);
  if (p == "ultra") return single(Property::UltraEuclidean);
  if (p == "uniquely") return single(Property::UniquelyEuclidean);
  if (p == "unit-lemmas") {
    const UnitLemmaReport r = check_unit_lemmas(c.f, c.domain, c.window);
    return Outcome{combine(report_code(r.unit_equality), report_code(r.min_at_units)),
                   Json{{"unit_equality", to_json(r.unit_equality)}, {"min_at_units", to_json(r.min_at_units)}},
                   report_text(r.unit_equality) + report_text(r.min_at_units)};
  }
  if (p == "unit-field") {
    const PropertyReport r = unit_field_closure(c.domain, c.window);
    return Outcome{report_code(r), to_json(r), report_text(r)};
  }
  throw Error(ErrorCode::ParseError, "unknown property '" + p +
                                         "' (expected euclidean, strongly, ultra, uniquely, unit-lemmas, unit-field)");
}

Outcome cmd_matrix(const Context& c, const Options&) {
  const MatrixReport m = theorem_matrix(c.f, c.domain, c.window);
  Outcome out{kExitOk, to_json(m), ""};
  for (const PropertyReport* r : {&m.euclidean, &m.strongly, &m.ultra, &m.uniquely}) {
    out.code = combine(out.code, report_code(*r));
    out.text += report_text(*r);
  }
  for (const auto& f : m.flags)
    out.text += "[" + snake_case(to_string(f.status)) + "] " + f.relation + ": " + f.detail + "\n";
  if (m.has_contradiction()) out.code = kExitFinding;
  return out;
}

Outcome cmd_refine(const Context& c, const Options& o) {
  if (!o.a.empty()) {
    const Element a = parse_element(c.domain, o.a);
    const CertifiedValue v = refine_eval(c.f, a, RefineStrategy::automatic(c.window));
    Json j = to_json(v);
    j["element"] = to_json(a);
    return Outcome{v.exact() ? kExitOk : kExitInconclusive, j, "f~(" + pretty(a) + ") = " + certified_text(v) + "\n"};
  }
  const RefinementReport r = check_refinement_properties(c.f, c.domain, c.window);
  Outcome out{r.table.all_exact ? kExitOk : kExitInconclusive, to_json(r), ""};
  for (const auto& [a, v] : r.table.entries) out.text += "f~(" + pretty(a) + ") = " + certified_text(v) + "\n";
  out.text += std::string("all exact: ") + (r.table.all_exact ? "yes" : "no") + "\n";
  out.text += "f~ " + report_text(r.strongly) + "f~ " + report_text(r.ultra) + report_text(r.fixed_point);
  out.text += "[" + snake_case(to_string(r.fixed_point_flag.status)) + "] " + r.fixed_point_flag.relation + ": " +
              r.fixed_point_flag.detail + "\n";
  return out;
}

Outcome cmd_decompose(const Context& c, const Options& o) {
  const Element a = required_element(c, o.a, "--a");
  const Element x = required_element(c, o.base, "--base");
  const Decomposition d = decompose_by(c.f, a, x, c.window);
  Outcome out{kExitOk, to_json(d), ""};
  std::string sum;
  for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
    if (d.coefficients[i].is_zero()) continue;
    if (!sum.empty()) sum += " + ";
    sum += factor(d.coefficients[i]);
    if (i > 0) sum += "·" + factor(x) + (i > 1 ? "^" + std::to_string(i) : "");
  }
  out.text = pretty(a) + " = " + (sum.empty() ? "0" : sum) + "\ncoefficients:";
  for (const auto& e : d.coefficients) out.text += " " + pretty(e);
  out.text += "\n";
  return out;
}

// ---------------------------------------------------------------- search

Json load_config(const std::string& path) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open config '" + path + "'");
    try {
      return Json::parse(in);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, "config '" + path + "': " + e.what());
    }
  }
  toml::table tbl;
  try {
    tbl = toml::parse_file(path);
  } catch (const toml::parse_error& e) {
    throw Error(ErrorCode::ParseError, "config '" + path + "': " + std::string(e.description()));
  }
  Json j = Json::object();
  for (const auto& [key, node] : tbl) {
    const std::string k(key.str());
    if (auto v = node.value<std::int64_t>()) {
      j[k] = *v;
    } else if (auto s = node.value<std::string>()) {
      j[k] = *s;
    } else if (auto b = node.value<bool>()) {
      j[k] = *b;
    } else {
      throw Error(ErrorCode::ParseError, "config key '" + k + "' must be an integer, string or boolean");
    }
  }
  return j;
}

Outcome cmd_search(const Context& c, const Options& o, bool bound_given) {
  if (o.candidate) {
    CandidateRecord rec;
    const SearchReport r = verify_candidate(c.f, c.domain, c.window, &rec);
    Outcome out{rec.stage == Stage::Survivor ? kExitFinding : kExitOk, to_json(r, o.timing), ""};
    out.result["record"] = to_json(rec);
    out.text = describe(c.f) + " on " + describe(c.domain, c.window) + ": " + snake_case(to_string(rec.stage)) + "\n";
    if (rec.witness) {
      out.text += "  witness:";
      for (const auto& e : rec.witness->elements) out.text += " " + pretty(e);
      out.text += "  (" + rec.witness->note + ")\n";
    }
    return out;
  }

  FamilySpec family{c.domain, AllFieldTables{o.max_value}, o.budget};
  if (o.family == "fields") {
    family.generator = AllFieldTables{o.max_value};
  } else if (o.family == "phi") {
    family.generator = PhiDegPerturbations{o.max_degree, o.max_value, o.exception_budget, o.exception_max_degree};
  } else if (o.family == "int") {
    family.generator = IntegerPerturbations{o.M, o.max_value, o.exception_budget};
  } else {
    throw Error(ErrorCode::ParseError, "unknown family '" + o.family + "' (expected fields, phi, int)");
  }
  // Search windows default small: each function costs a full property sweep.
  Window window = c.window;
  if (!bound_given && c.domain.kind == DomainKind::PolyRing) window = Window::degree(3);
  if (!bound_given && c.domain.kind == DomainKind::Integers) window = Window::magnitude(10);
  validate(c.domain, window);

  const SearchReport r = run_search(family, window);
  Outcome out{r.candidates.empty() ? kExitOk : kExitFinding, to_json(r, o.timing), ""};
  out.text = std::to_string(r.functions_examined) + " functions on " + describe(c.domain, window) + ": " +
             std::to_string(r.rejected_euclidean) + " not Euclidean, " + std::to_string(r.rejected_ultra) +
             " not ultra, " + std::to_string(r.rejected_strongly) + " strongly, " + std::to_string(r.stage2.size()) +
             " reached refinement, " + std::to_string(r.candidates.size()) + " survivor(s)\n";
  for (const auto& rec : r.stage2)
    out.text += "  #" + std::to_string(rec.index) + " " + describe(rec.fn) + ": " + snake_case(to_string(rec.stage)) +
                "\n";

  if (o.verify_window >= 0) {
    const Window larger{o.verify_window};
    validate(c.domain, larger);
    Json escalation = Json::array();
    for (const auto& rec : r.stage2) {
      CandidateRecord again;
      verify_candidate(rec.fn, c.domain, larger, &again);
      again.index = rec.index;
      escalation.push_back(to_json(again));
      out.text += "  #" + std::to_string(rec.index) + " at " + describe(c.domain, larger) + ": " +
                  snake_case(to_string(again.stage)) + "\n";
    }
    out.result["escalation"] = escalation;
    out.result["verify_window"] = larger.bound;
  }
  return out;
}

// ---------------------------------------------------------------- driver

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--domain", o.domain, "Z, quad, field, poly or series")->capture_default_str();
  cmd->add_option("--d", o.d, "quadratic discriminant parameter (-11,-7,-3,-2,-1,2,3)")->capture_default_str();
  cmd->add_option("--q", o.q, "field size (2,3,4,5,7)")->capture_default_str();
  cmd->add_option("--precision", o.precision, "series precision T (2..64)")->capture_default_str();
  cmd->add_option("--fn", o.fn, "abs, deg, ord, norm, phi, table or exc (default: the domain's classical one)");
  cmd->add_option("--phi", o.phi, "phi values for --fn phi, comma separated");
  cmd->add_option("--table", o.table, "field table for --fn table, e.g. 1:0,a:1,b:1");
  cmd->add_option("--base-fn", o.base_fn, "base function for --fn exc");
  cmd->add_option("--exceptions", o.exceptions, "overrides for --fn exc, e.g. 3:9,-3:9");
  cmd->add_option("--max,--degree", o.bound, "window bound: magnitude M (Z, quad) or degree D (poly)");
  cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  cmd->add_flag("--timing", o.timing, "include wall-clock timing in the report");
}

Json error_json(const std::string& code, const std::string& message) {
  return Json{{"error", code}, {"message", message}};
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::PrecisionExhausted:
    case ErrorCode::RangeExceeded: return kExitInconclusive;
    case ErrorCode::NonUniqueStep:
    case ErrorCode::NonUnitRemainder:
    case ErrorCode::NoDescent: return kExitFinding;
    default: return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"euclid-lab: verification laboratory for Euclidean functions", "euclid-lab"};
  app.footer(kSyntaxHelp);
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    std::function<Outcome(const Context&, const Options&)> run;
  };
  bool bound_given = false;
  const std::vector<Sub> subs = {
      {"divide", "canonical division of --a by --b", cmd_divide},
      {"enumerate", "all valid divisions of --a by --b under the function", cmd_enumerate},
      {"gcd", "extended gcd of --a and --b", cmd_gcd},
      {"check", "check one --property over the window", cmd_check},
      {"matrix", "all four properties plus theorem consistency flags", cmd_matrix},
      {"refine", "refinement f~ at --a, or over the window with property checks", cmd_refine},
      {"decompose", "expand --a in powers of --base", cmd_decompose},
      {"search", "counterexample search over a family of functions",
       [&bound_given](const Context& c, const Options& opt) { return cmd_search(c, opt, bound_given); }},
  };
  std::map<std::string, CLI::App*> cmds;
  for (const auto& s : subs) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    add_common(cmd, o);
    cmds[s.name] = cmd;
  }
  for (const char* name : {"divide", "enumerate", "gcd", "decompose", "refine"})
    cmds[name]->add_option("--a", o.a, "dividend / element");
  for (const char* name : {"divide", "enumerate", "gcd"}) cmds[name]->add_option("--b", o.b, "divisor");
  cmds["decompose"]->add_option("--base", o.base, "non-unit base x");
  cmds["check"]->add_option("--property", o.property,
                            "euclidean, strongly, ultra, uniquely, unit-lemmas or unit-field")
      ->capture_default_str();
  cmds["check"]->add_flag("--all", o.all, "report every violation, not only the first");
  CLI::App* search = cmds["search"];
  search->add_option("--config", o.config, "TOML or JSON campaign file (flags override it)");
  search->add_option("--family", o.family, "fields, phi or int")->capture_default_str();
  search->add_option("--max-value", o.max_value, "largest function value generated")->capture_default_str();
  search->add_option("--max-degree", o.max_degree, "phi family: degrees covered by phi")->capture_default_str();
  search->add_option("--exception-budget", o.exception_budget, "overridden points per function")
      ->capture_default_str();
  search->add_option("--exception-max-degree", o.exception_max_degree, "phi family: degree of overridden points")
      ->capture_default_str();
  search->add_option("--M", o.M, "int family: overridden points lie in [-M, M]")->capture_default_str();
  search->add_option("--budget", o.budget, "maximum number of functions")->capture_default_str();
  search->add_option("--verify-window", o.verify_window, "re-check refinement-stage functions at this window");
  search->add_flag("--candidate", o.candidate, "run the pipeline on the --fn function only");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what()).dump() << "\n";
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    if (name == "search" && !o.config.empty()) {
      // Config values apply unless the same flag was given explicitly.
      const Json cfg = load_config(o.config);
      auto take = [&](const char* key, const char* flag, auto& target) {
        if (cfg.contains(key) && chosen->count(flag) == 0) target = cfg.at(key).get<std::decay_t<decltype(target)>>();
      };
      take("domain", "--domain", o.domain);
      take("d", "--d", o.d);
      take("q", "--q", o.q);
      take("precision", "--precision", o.precision);
      take("family", "--family", o.family);
      take("max_value", "--max-value", o.max_value);
      take("max_degree", "--max-degree", o.max_degree);
      take("exception_budget", "--exception-budget", o.exception_budget);
      take("exception_max_degree", "--exception-max-degree", o.exception_max_degree);
      take("M", "--M", o.M);
      take("budget", "--budget", o.budget);
      take("window", "--max", o.bound);
      take("verify_window", "--verify-window", o.verify_window);
    }
    bound_given = o.bound >= 0;
    Context c = make_context(o);
    for (const char* flag : {"--a", "--b", "--base", "--property"})
      if (chosen->get_option_no_throw(flag) != nullptr && chosen->count(flag) > 0)
        c.args[std::string(flag + 2)] = chosen->get_option(flag)->as<std::string>();
    if (name == "search") {
      c.args["family"] = o.family;
      c.args["budget"] = o.budget;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    for (const auto& s : subs)
      if (name == s.name) result = s.run(c, o);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (o.format == "json") {
      Report report{name, c.args, result.result, std::nullopt};
      if (o.timing) report.timing_ms = ms;
      out << dump(to_json(report));
    } else {
      out << result.text;
      if (o.timing) out << "elapsed: " << ms << " ms\n";
    }
    return result.code;
  } catch (const DecompositionError& e) {
    Json j = error_json(snake_case(to_string(e.code())), e.what());
    j["witness"] = to_json(e.witness());
    err << j.dump() << "\n";
    return exit_for(e.code());
  } catch (const Error& e) {
    err << error_json(snake_case(to_string(e.code())), e.what()).dump() << "\n";
    return exit_for(e.code());
  } catch (const Json::exception& e) {
    err << error_json("parse_error", e.what()).dump() << "\n";
    return kExitUsage;
  }
}

}  // namespace euclid
