#pragma once

#include <cstdio>
#include <string>

namespace entrostab {

/// Round-trip-exact scientific formatting for every floating-point value we
/// emit; regression comparisons are byte-based.
inline std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17e", v);
  return buf;
}

}  // namespace entrostab
