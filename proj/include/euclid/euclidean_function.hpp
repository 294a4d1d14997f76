#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "euclid/domain.hpp"
#include "euclid/element.hpp"

namespace euclid {

/// A value of a Euclidean function: a non-negative integer.
struct Nat {
  std::uint64_t value = 0;

  constexpr Nat() = default;
  constexpr explicit Nat(std::uint64_t v) : value(v) {}
  constexpr auto operator<=>(const Nat&) const = default;
};

enum class FnKind { AbsValue, Degree, Order, QuadNorm, PhiDeg, FieldTable, ExceptionTable };

std::string_view to_string(FnKind kind);

/// Description of a candidate Euclidean function f : R \ {0} -> Z>=0.
///
/// ExceptionTable functions evaluate `base` (one of the built-in kinds, with
/// `phi` supplying the table when base is PhiDeg) everywhere except at the
/// listed points, where the listed value wins.
struct EuclideanFnSpec {
  FnKind kind = FnKind::AbsValue;
  FnKind base = FnKind::AbsValue;
  std::vector<Nat> phi;
  int field_q = 0;
  std::map<FieldElem, Nat> table;
  std::vector<std::pair<Element, Nat>> exceptions;

  static EuclideanFnSpec abs_value();
  static EuclideanFnSpec degree();
  static EuclideanFnSpec order();
  static EuclideanFnSpec quad_norm();
  static EuclideanFnSpec phi_deg(std::vector<Nat> phi);
  static EuclideanFnSpec field_table(int q, std::map<FieldElem, Nat> table);
  static EuclideanFnSpec constant(int q, Nat value);
  /// Wraps a built-in (or PhiDeg) function with point overrides.
  static EuclideanFnSpec with_exceptions(const EuclideanFnSpec& base,
                                         std::vector<std::pair<Element, Nat>> exceptions);

  /// Kind used away from the exception points.
  FnKind effective_kind() const noexcept { return kind == FnKind::ExceptionTable ? base : kind; }

  friend bool operator==(const EuclideanFnSpec&, const EuclideanFnSpec&) = default;
};

/// Structured result of validate_fspec.
struct SpecViolation {
  enum class Kind {
    NonIncreasingPhi,
    EmptyPhi,
    PartialTable,
    BadTableKey,
    BadBase,
    ExceptionAtZero,
    DuplicateException,
  };
  Kind kind;
  std::size_t index = 0;           // NonIncreasingPhi: i with phi(i) >= phi(i+1)
  Nat left{}, right{};             // NonIncreasingPhi: phi(i), phi(i+1)
  std::optional<FieldElem> entry;  // PartialTable / BadTableKey
  std::optional<Element> point;    // ExceptionAtZero / DuplicateException
  std::string message;
};

std::string_view to_string(SpecViolation::Kind kind);

std::optional<SpecViolation> validate_fspec(const EuclideanFnSpec& f);

/// True when f can be evaluated on nonzero elements of `domain`.
bool compatible(const EuclideanFnSpec& f, const DomainSpec& domain);
/// Throws InvalidFunction (validate_fspec) or IncompatibleFunction.
void require_compatible(const EuclideanFnSpec& f, const DomainSpec& domain);

/// The function each domain is classically Euclidean for: |.| on Z, N on
/// O_d, deg on K[x], ord on K[[x]], and the zero function on a field.
EuclideanFnSpec default_function(const DomainSpec& domain);

/// Built-in kinds that are strongly Euclidean on every supported domain
/// (PhiDeg included since phi is strictly increasing).
bool is_strongly_builtin(FnKind kind) noexcept;

/// Evaluates f at a nonzero element.
/// Errors: EvalAtZero, PrecisionExhausted (series residue 0 mod x^T),
/// RangeExceeded (PhiDeg degree outside phi, or value beyond 64 bits),
/// IncompatibleFunction.
Nat eval_f(const EuclideanFnSpec& f, const Element& a);

/// All nonzero r with f(r) < bound, in enumeration order, when that set is
/// finite and derivable from f's definition; nullopt otherwise (real
/// quadratic norms, a PhiDeg table that stops below `bound`).
std::optional<std::vector<Element>> sublevel_set(const EuclideanFnSpec& f,
                                                 const DomainSpec& domain, Nat bound);

/// All nonzero r with g(r) == level for a built-in strongly Euclidean g
/// (AbsValue, Degree, PhiDeg, QuadNorm with d < 0, Order below T);
/// nullopt when the level set is not finitely enumerable.
std::optional<std::vector<Element>> level_set(const EuclideanFnSpec& g,
                                              const DomainSpec& domain, Nat level);

std::string describe(const EuclideanFnSpec& f);

}  // namespace euclid
