#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace euclid {

/// Index into a finite field's element table. For prime fields the index is
/// the residue itself. For F4 the index encodes c0 + c1*alpha in its two low
/// bits, so 0, 1, 2 = alpha, 3 = beta = alpha + 1.
using FieldElem = std::uint8_t;

/// Table-driven arithmetic for the small fields F2, F3, F4, F5, F7.
class FiniteField {
 public:
  static constexpr int kMaxOrder = 7;

  /// Returns the shared immutable table for F_q. Throws InvalidDomain for an
  /// unsupported q.
  static const FiniteField& get(int q);
  static bool supported(int q) noexcept;

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }

  FieldElem add(FieldElem a, FieldElem b) const noexcept { return add_[a][b]; }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept { return add_[a][neg_[b]]; }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept { return mul_[a][b]; }
  FieldElem neg(FieldElem a) const noexcept { return neg_[a]; }
  /// Multiplicative inverse; throws DivisionByZero at 0.
  FieldElem inv(FieldElem a) const;

 private:
  explicit FiniteField(int q);

  using Table = std::array<std::array<FieldElem, kMaxOrder>, kMaxOrder>;

  int q_;
  int p_;
  Table add_{};
  Table mul_{};
  std::array<FieldElem, kMaxOrder> neg_{};
  std::array<FieldElem, kMaxOrder> inv_{};
};

}  // namespace euclid
