#pragma once

#include <string_view>

namespace jetworks {

enum class Truth { True, False, Unknown };

constexpr std::string_view to_string(Truth t) noexcept {
  switch (t) {
    case Truth::True: return "TRUE";
    case Truth::False: return "FALSE";
    case Truth::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

constexpr Truth from_bool(bool b) noexcept { return b ? Truth::True : Truth::False; }

}  // namespace jetworks
