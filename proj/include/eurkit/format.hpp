#pragma once

#include <cstdio>
#include <string>

namespace eurkit {

/// Shortest-faithful decimal at 17 significant digits, the round-trip-safe
/// form used by every CSV and JSON writer.
inline std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

/// Compact three-digit form for diagnostics, where tolerance-scale values
/// must stay visible (std::to_string would print 1e-9 as 0.000000).
inline std::string format_g3(double x) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

}  // namespace eurkit
