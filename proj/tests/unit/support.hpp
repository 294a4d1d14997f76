#pragma once

#include <optional>
#include <string>
#include <vector>

#include "euclid/domain.hpp"
#include "euclid/element.hpp"
#include "euclid/errors.hpp"
#include "euclid/notation.hpp"

namespace testing {

/// The ErrorCode thrown by fn, or nullopt if it returns normally.
template <class Fn>
std::optional<euclid::ErrorCode> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const euclid::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline euclid::Element el(const euclid::DomainSpec& d, const std::string& text) {
  return euclid::parse_element(d, text);
}

inline euclid::Element Z(long long n) { return euclid::Element::integer(n); }

inline std::vector<std::string> rendered(const std::vector<euclid::Element>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(euclid::render(e));
  return out;
}

}  // namespace testing
