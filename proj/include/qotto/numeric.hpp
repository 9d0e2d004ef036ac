#pragma once
// Shared float helpers: classification tolerance default, floored relative
// comparison, and shortest round-trip decimal formatting.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

namespace qotto {

// Default tolerance for sign and regime classification decisions.
inline constexpr double classify_tol = 1e-9;

// |a - b| <= tol * max(1, |a|, |b|).
inline bool rel_close(double a, double b, double tol) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

// Shortest decimal string that parses back to exactly the same double.
inline std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace qotto
