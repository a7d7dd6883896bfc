#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace ballspec {

// Shortest-ish stable rendering used by every CSV/JSON writer: %.15g.
inline std::string format_g15(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

// The double nearest to format_g15(value); JSON writers emit the shortest
// round-trip form, so this caps them at 15 significant digits too.
inline double round_g15(double value) { return std::strtod(format_g15(value).c_str(), nullptr); }

}  // namespace ballspec
