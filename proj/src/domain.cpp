#include "euclid/domain.hpp"

#include <algorithm>
#include <array>

#include "euclid/errors.hpp"

namespace euclid {

namespace {

constexpr std::array kSupportedD{-11, -7, -3, -2, -1, 2, 3};
constexpr int kMaxSeriesPrecision = 64;

}  // namespace

DomainSpec DomainSpec::integers() { return DomainSpec{DomainKind::Integers, 0, 0, 0}; }

DomainSpec DomainSpec::quadratic(int d) {
  DomainSpec s{DomainKind::QuadraticRing, d, 0, 0};
  validate(s);
  return s;
}

DomainSpec DomainSpec::finite_field(int q) {
  DomainSpec s{DomainKind::FiniteField, 0, q, 0};
  validate(s);
  return s;
}

DomainSpec DomainSpec::poly(int q) {
  DomainSpec s{DomainKind::PolyRing, 0, q, 0};
  validate(s);
  return s;
}

DomainSpec DomainSpec::series(int q, int precision) {
  DomainSpec s{DomainKind::SeriesRing, 0, q, precision};
  validate(s);
  return s;
}

void validate(const DomainSpec& s) {
  switch (s.kind) {
    case DomainKind::Integers:
      if (s.d != 0 || s.q != 0 || s.precision != 0)
        throw Error(ErrorCode::InvalidDomain, "Integers takes no parameters");
      return;
    case DomainKind::QuadraticRing:
      if (std::find(kSupportedD.begin(), kSupportedD.end(), s.d) == kSupportedD.end())
        throw Error(ErrorCode::InvalidDomain,
                    "unsupported d=" + std::to_string(s.d) +
                        " (allowed: -11, -7, -3, -2, -1, 2, 3)");
      if (s.q != 0 || s.precision != 0)
        throw Error(ErrorCode::InvalidDomain, "QuadraticRing takes only d");
      return;
    case DomainKind::FiniteField:
    case DomainKind::PolyRing:
    case DomainKind::SeriesRing:
      if (!FiniteField::supported(s.q))
        throw Error(ErrorCode::InvalidDomain,
                    "unsupported q=" + std::to_string(s.q) + " (allowed: 2, 3, 4, 5, 7)");
      if (s.d != 0) throw Error(ErrorCode::InvalidDomain, "d is only meaningful for QuadraticRing");
      if (s.kind == DomainKind::SeriesRing) {
        if (s.precision < 2 || s.precision > kMaxSeriesPrecision)
          throw Error(ErrorCode::InvalidDomain,
                      "series precision must be in [2, 64], got " + std::to_string(s.precision));
      } else if (s.precision != 0) {
        throw Error(ErrorCode::InvalidDomain, "precision is only meaningful for SeriesRing");
      }
      return;
  }
}

std::string describe(const DomainSpec& s) {
  switch (s.kind) {
    case DomainKind::Integers: return "Z";
    case DomainKind::QuadraticRing: return "O(" + std::to_string(s.d) + ")";
    case DomainKind::FiniteField: return "F" + std::to_string(s.q);
    case DomainKind::PolyRing: return "F" + std::to_string(s.q) + "[x]";
    case DomainKind::SeriesRing:
      return "F" + std::to_string(s.q) + "[[x]]/x^" + std::to_string(s.precision);
  }
  return "?";
}

void validate(const DomainSpec& domain, const Window& window) {
  validate(domain);
  switch (domain.kind) {
    case DomainKind::Integers:
    case DomainKind::QuadraticRing:
      if (window.bound < 1)
        throw Error(ErrorCode::InvalidWindow, "magnitude bound must be at least 1");
      return;
    case DomainKind::PolyRing:
      if (window.bound < 0)
        throw Error(ErrorCode::InvalidWindow, "degree bound must be non-negative");
      return;
    case DomainKind::FiniteField:
    case DomainKind::SeriesRing:
      return;
  }
}

bool window_is_exhaustive(const DomainSpec& domain) noexcept {
  return domain.kind == DomainKind::FiniteField || domain.kind == DomainKind::SeriesRing;
}

std::string describe(const DomainSpec& domain, const Window& window) {
  switch (domain.kind) {
    case DomainKind::Integers:
    case DomainKind::QuadraticRing: return "M=" + std::to_string(window.bound);
    case DomainKind::PolyRing: return "D=" + std::to_string(window.bound);
    case DomainKind::FiniteField: return "whole field";
    case DomainKind::SeriesRing:
      return "all residues mod x^" + std::to_string(domain.precision);
  }
  return "?";
}

}  // namespace euclid
