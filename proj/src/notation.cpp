#include "euclid/notation.hpp"

#include <cctype>
#include <string>

#include "euclid/errors.hpp"
#include "euclid/euclidean_function.hpp"

namespace euclid {

namespace {

constexpr std::string_view kAlpha = "\xce\xb1";  // α
constexpr std::string_view kBeta = "\xce\xb2";   // β
constexpr std::string_view kSqrt = "\xe2\x88\x9a";  // √

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  std::optional<BigInt> number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }
  long small_number() {
    auto n = number();
    if (!n || *n > 1'000'000) fail("expected a small non-negative integer");
    return static_cast<long>(*n);
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                "cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// +1 / -1 for a leading or joining sign; 0 when absent.
int read_sign(Cursor& cur) {
  if (cur.accept("+")) return 1;
  if (cur.accept("-")) return -1;
  return 0;
}

std::optional<FieldElem> read_field_coefficient(Cursor& cur, const DomainSpec& domain) {
  const auto& k = domain.field();
  if (domain.q == 4) {
    if (cur.accept("a") || cur.accept(kAlpha)) return FieldElem{2};
    if (cur.accept("b") || cur.accept(kBeta)) return FieldElem{3};
  }
  if (auto n = cur.number()) {
    const auto r = static_cast<FieldElem>(static_cast<int>(*n % k.characteristic()));
    return r;
  }
  return std::nullopt;
}

Element parse_integer(const DomainSpec& domain, Cursor& cur) {
  int sign = read_sign(cur);
  auto n = cur.number();
  if (!n) cur.fail("expected an integer");
  if (!cur.at_end()) cur.fail("trailing characters");
  return Element(domain, BigInt(sign < 0 ? BigInt(-*n) : *n));
}

Element parse_field(const DomainSpec& domain, Cursor& cur) {
  int sign = read_sign(cur);
  auto c = read_field_coefficient(cur, domain);
  if (!c) cur.fail("expected a field element");
  if (!cur.at_end()) cur.fail("trailing characters");
  const auto& k = domain.field();
  return Element(domain, sign < 0 ? k.neg(*c) : *c);
}

Element parse_coefficient_ring(const DomainSpec& domain, Cursor& cur) {
  const auto& k = domain.field();
  const bool series = domain.kind == DomainKind::SeriesRing;
  std::vector<FieldElem> coeffs;
  bool first = true;
  bool any = false;
  while (!cur.at_end()) {
    int sign = read_sign(cur);
    if (!first && sign == 0) cur.fail("expected '+' or '-' between terms");
    first = false;
    if (series && cur.accept("O(")) {
      cur.expect("x");
      cur.expect("^");
      const long t = cur.small_number();
      cur.expect(")");
      if (t != domain.precision) cur.fail("O(x^n) must match the series precision");
      if (!cur.at_end()) cur.fail("O(x^n) must be the last term");
      any = true;
      break;
    }
    auto coef = read_field_coefficient(cur, domain);
    bool star = coef && cur.accept("*");
    long power = 0;
    if (cur.accept("x")) {
      power = 1;
      if (cur.accept("^")) power = cur.small_number();
    } else if (!coef || star) {
      cur.fail("expected a coefficient or x");
    }
    FieldElem c = coef.value_or(FieldElem{1});
    if (sign < 0) c = k.neg(c);
    if (series && power >= domain.precision) {
      any = true;
      continue;
    }
    if (coeffs.size() <= static_cast<std::size_t>(power)) coeffs.resize(static_cast<std::size_t>(power) + 1, 0);
    coeffs[static_cast<std::size_t>(power)] = k.add(coeffs[static_cast<std::size_t>(power)], c);
    any = true;
  }
  if (!any) cur.fail("empty expression");
  if (series) return Element::series(domain.q, domain.precision, std::move(coeffs));
  return Element::poly(domain.q, std::move(coeffs));
}

Element parse_quadratic(const DomainSpec& domain, Cursor& cur) {
  BigInt u = 0, v = 0;
  bool first = true;
  bool any = false;
  while (!cur.at_end()) {
    int sign = read_sign(cur);
    if (!first && sign == 0) cur.fail("expected '+' or '-' between terms");
    first = false;
    // Doubled numerator of the rational coefficient.
    std::optional<BigInt> twice;
    if (auto n = cur.number()) {
      if (cur.accept("/")) {
        if (cur.small_number() != 2) cur.fail("only halves are allowed as denominators");
        twice = *n;
      } else {
        twice = 2 * *n;
      }
    }
    bool star = twice && cur.accept("*");
    bool surd = false;
    if (cur.accept("sqrt(")) {
      int s = read_sign(cur);
      const long d = cur.small_number();
      cur.expect(")");
      if ((s < 0 ? -d : d) != domain.d) cur.fail("sqrt argument must be d=" + std::to_string(domain.d));
      surd = true;
    } else if (cur.accept("i")) {
      if (domain.d != -1) cur.fail("'i' is only available for d=-1");
      surd = true;
    } else if (!twice || star) {
      cur.fail("expected a number, sqrt(d) or i");
    }
    BigInt term = twice.value_or(BigInt(2));
    if (sign < 0) term = -term;
    (surd ? v : u) += term;
    any = true;
  }
  if (!any) cur.fail("empty expression");
  try {
    return Element(domain, QuadCoords{u, v});
  } catch (const Error&) {
    cur.fail("coordinates are not in the ring of integers for d=" + std::to_string(domain.d));
  }
}

std::string coefficient_text(const DomainSpec& domain, FieldElem c, Notation notation) {
  if (domain.q == 4 && c >= 2) {
    if (notation == Notation::Pretty) return std::string(c == 2 ? kAlpha : kBeta);
    return c == 2 ? "a" : "b";
  }
  return std::to_string(static_cast<int>(c));
}

std::string render_coefficients(const DomainSpec& domain, const std::vector<FieldElem>& c,
                                Notation notation) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string power = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (i == 0) {
      out += coefficient_text(domain, c[i], notation);
    } else if (c[i] == 1) {
      out += power;
    } else {
      out += coefficient_text(domain, c[i], notation);
      if (notation == Notation::Ascii) out += "*";
      out += power;
    }
  }
  return out;
}

std::string half_text(const BigInt& twice) {
  if ((twice & 1) == 0) return BigInt(twice / 2).str();
  return twice.str() + "/2";
}

std::string render_quadratic(const Element& a, Notation notation) {
  const auto& p = a.as_quadratic();
  const int d = a.domain().d;
  std::string out;
  if (p.u != 0) out = half_text(p.u);
  if (p.v != 0) {
    std::string symbol;
    if (d == -1) {
      symbol = "i";
    } else if (notation == Notation::Pretty) {
      symbol = std::string(kSqrt) + std::to_string(d);
    } else {
      symbol = "sqrt(" + std::to_string(d) + ")";
    }
    const BigInt mag = abs(p.v);
    if (p.v < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (mag != 2) {
      out += half_text(mag);
      if (d != -1 && notation == Notation::Ascii) out += "*";
    }
    out += symbol;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Element parse_element(const DomainSpec& domain, std::string_view text) {
  validate(domain);
  Cursor cur(text);
  switch (domain.kind) {
    case DomainKind::Integers: return parse_integer(domain, cur);
    case DomainKind::QuadraticRing: return parse_quadratic(domain, cur);
    case DomainKind::FiniteField: return parse_field(domain, cur);
    case DomainKind::PolyRing:
    case DomainKind::SeriesRing: return parse_coefficient_ring(domain, cur);
  }
  cur.fail("unknown domain");
}

std::string render(const Element& a, Notation notation) {
  const DomainSpec& domain = a.domain();
  switch (domain.kind) {
    case DomainKind::Integers: return a.as_integer().str();
    case DomainKind::QuadraticRing: return render_quadratic(a, notation);
    case DomainKind::FiniteField: return coefficient_text(domain, a.as_field(), notation);
    case DomainKind::PolyRing: {
      std::string s = render_coefficients(domain, a.coefficients(), notation);
      return s.empty() ? "0" : s;
    }
    case DomainKind::SeriesRing: {
      std::string s = render_coefficients(domain, a.coefficients(), notation);
      std::string tail = "O(x^" + std::to_string(domain.precision) + ")";
      return s.empty() ? tail : s + "+" + tail;
    }
  }
  return "?";
}

std::string describe(const EuclideanFnSpec& f) {
  auto phi_text = [&] {
    std::string s = "[";
    for (std::size_t i = 0; i < f.phi.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(f.phi[i].value);
    }
    return s + "]";
  };
  switch (f.kind) {
    case FnKind::AbsValue: return "abs";
    case FnKind::Degree: return "deg";
    case FnKind::Order: return "ord";
    case FnKind::QuadNorm: return "norm";
    case FnKind::PhiDeg: return "phi" + phi_text() + "(deg)";
    case FnKind::FieldTable: {
      const DomainSpec field = DomainSpec::finite_field(f.field_q);
      std::string s = "table{";
      bool first = true;
      for (const auto& [k, v] : f.table) {
        if (!first) s += ",";
        first = false;
        s += coefficient_text(field, k, Notation::Ascii) + ":" + std::to_string(v.value);
      }
      return s + "}";
    }
    case FnKind::ExceptionTable: {
      EuclideanFnSpec base;
      base.kind = f.base;
      base.phi = f.phi;
      std::string s = describe(base) + " except {";
      for (std::size_t i = 0; i < f.exceptions.size(); ++i) {
        if (i) s += ",";
        s += render(f.exceptions[i].first) + ":" + std::to_string(f.exceptions[i].second.value);
      }
      return s + "}";
    }
  }
  return "?";
}

}  // namespace euclid
