#include "euclid/finite_field.hpp"

#include "euclid/errors.hpp"

#include <string>

namespace euclid {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::InvalidWindow: return "InvalidWindow";
    case ErrorCode::IncompatibleFunction: return "IncompatibleFunction";
    case ErrorCode::InvalidFunction: return "InvalidFunction";
    case ErrorCode::EvalAtZero: return "EvalAtZero";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::RangeExceeded: return "RangeExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::WindowRequired: return "WindowRequired";
    case ErrorCode::IdentityFails: return "IdentityFails";
    case ErrorCode::NonUniqueStep: return "NonUniqueStep";
    case ErrorCode::NonUnitRemainder: return "NonUnitRemainder";
    case ErrorCode::NoDescent: return "NoDescent";
    case ErrorCode::BudgetZero: return "BudgetZero";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool FiniteField::supported(int q) noexcept {
  return q == 2 || q == 3 || q == 4 || q == 5 || q == 7;
}

const FiniteField& FiniteField::get(int q) {
  static const FiniteField f2(2), f3(3), f4(4), f5(5), f7(7);
  switch (q) {
    case 2: return f2;
    case 3: return f3;
    case 4: return f4;
    case 5: return f5;
    case 7: return f7;
    default:
      throw Error(ErrorCode::InvalidDomain,
                  "unsupported field size q=" + std::to_string(q));
  }
}

FiniteField::FiniteField(int q) : q_(q), p_(q == 4 ? 2 : q) {
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (q == 4) {
        // (a0 + a1 t)(b0 + b1 t) with t^2 = t + 1.
        const int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
        const int hi = a1 & b1;
        const int c0 = (a0 & b0) ^ hi;
        const int c1 = (a0 & b1) ^ (a1 & b0) ^ hi;
        add_[a][b] = static_cast<FieldElem>(a ^ b);
        mul_[a][b] = static_cast<FieldElem>(c0 | (c1 << 1));
      } else {
        add_[a][b] = static_cast<FieldElem>((a + b) % q);
        mul_[a][b] = static_cast<FieldElem>((a * b) % q);
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a][b] == 0) neg_[a] = static_cast<FieldElem>(b);
      if (mul_[a][b] == 1) inv_[a] = static_cast<FieldElem>(b);
    }
  }
}

FieldElem FiniteField::inv(FieldElem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in F" + std::to_string(q_));
  return inv_[a];
}

}  // namespace euclid
