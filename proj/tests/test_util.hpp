#pragma once

#include <optional>
#include <ostream>

#include "schubert/error.hpp"

namespace schubert {

inline std::ostream& operator<<(std::ostream& os, ErrorCode c) { return os << error_code_name(c); }

}  // namespace schubert

namespace schubert::testing {

/// The code of the schubert::Error thrown by f, or nullopt when f returns normally.
template <typename F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace schubert::testing
