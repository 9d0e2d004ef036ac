#pragma once
// Energy spectra (strictly increasing level lists), their gap vectors, and
// the three-level parameter families used by the preset sweeps.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qotto/numeric.hpp"

namespace qotto {

// Levels must be finite and strictly increasing; a gap at or below
// 1e-12 * max|level| counts as degenerate and is rejected.
struct EnergySpectrum {
  std::vector<double> levels;

  explicit EnergySpectrum(std::vector<double> lv) : levels(std::move(lv)) {
    if (levels.size() < 2)
      throw std::invalid_argument("spectrum needs at least 2 levels, got " +
                                  std::to_string(levels.size()));
    double amax = 0.0;
    for (std::size_t k = 0; k < levels.size(); ++k) {
      if (!std::isfinite(levels[k]))
        throw std::invalid_argument("spectrum level " + std::to_string(k) +
                                    " is not finite");
      amax = std::max(amax, std::fabs(levels[k]));
    }
    const double degenerate = 1e-12 * amax;
    for (std::size_t k = 1; k < levels.size(); ++k) {
      if (!(levels[k] - levels[k - 1] > degenerate))
        throw std::invalid_argument(
            "levels must increase strictly: levels[" + std::to_string(k) +
            "] = " + fmt_double(levels[k]) + " does not exceed levels[" +
            std::to_string(k - 1) + "] = " + fmt_double(levels[k - 1]));
    }
  }

  std::size_t size() const { return levels.size(); }
};

// Adjacent level differences omega_j = e_{j+1} - e_j; all positive.
struct GapVector {
  std::vector<double> gaps;
  double total = 0.0;
};

inline GapVector gaps_of(const EnergySpectrum& s) {
  GapVector g;
  g.gaps.reserve(s.size() - 1);
  g.total = 0.0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    g.gaps.push_back(s.levels[k] - s.levels[k - 1]);
    g.total += g.gaps.back();
  }
  return g;
}

// fig_a maps (B, J) to (-B, -J, B) and needs B > J > -B.
// fig_b and fig_c map (B, J) to (-B, B, J) and need J > B > 0; they share a
// shape and differ only in which parameter a sweep varies.
enum class Family { fig_a, fig_b, fig_c };

inline EnergySpectrum build_family(Family f, double b, double j) {
  if (!std::isfinite(b) || !std::isfinite(j))
    throw std::invalid_argument("family parameters must be finite, got B = " +
                                fmt_double(b) + ", J = " + fmt_double(j));
  if (f == Family::fig_a) {
    if (!(b > j))
      throw std::invalid_argument("family figa requires B > J, got B = " +
                                  fmt_double(b) + ", J = " + fmt_double(j));
    if (!(j > -b))
      throw std::invalid_argument("family figa requires J > -B, got J = " +
                                  fmt_double(j) + ", -B = " + fmt_double(-b));
    return EnergySpectrum({-b, -j, b});
  }
  if (!(b > 0))
    throw std::invalid_argument("family figb/figc requires B > 0, got B = " +
                                fmt_double(b));
  if (!(j > b))
    throw std::invalid_argument("family figb/figc requires J > B, got J = " +
                                fmt_double(j) + ", B = " + fmt_double(b));
  return EnergySpectrum({-b, b, j});
}

inline Family parse_family(std::string_view name) {
  std::string low;
  for (char c : name) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (low == "figa") return Family::fig_a;
  if (low == "figb") return Family::fig_b;
  if (low == "figc") return Family::fig_c;
  throw std::invalid_argument("unknown spectrum family '" + std::string(name) +
                              "' (expected figa, figb, or figc)");
}

namespace detail {

inline std::vector<double> parse_double_list(std::string_view text,
                                             std::string_view what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.remove_suffix(1);
    double v = 0.0;
    auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size())
      throw std::invalid_argument("malformed " + std::string(what) + " entry '" +
                                  std::string(item) + "' in '" + std::string(text) +
                                  "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

// Accepts "e1,e2,..." (ascending decimal literals; order is validated, never
// silently sorted) or "figa:B,J" / "figb:B,J" / "figc:B,J".
inline EnergySpectrum parse_spectrum(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon != std::string_view::npos) {
    Family f = parse_family(text.substr(0, colon));
    auto params = detail::parse_double_list(text.substr(colon + 1), "family parameter");
    if (params.size() != 2)
      throw std::invalid_argument("family spectrum '" + std::string(text) +
                                  "' needs exactly 2 parameters (B,J), got " +
                                  std::to_string(params.size()));
    return build_family(f, params[0], params[1]);
  }
  return EnergySpectrum(detail::parse_double_list(text, "spectrum"));
}

}  // namespace qotto
