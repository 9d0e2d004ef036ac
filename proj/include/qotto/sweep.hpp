#pragma once
// Cold-temperature sweeps over 3-level Otto cycles and the figure presets,
// with CSV output. Column contract:
//   t2,w,q1,q2,eta,dp1,dp3,case,cond,maj,xi1,xi2
// where dp1 = P1'-P1, dp3 = P3-P3', eta is empty off the engine regime, and
// all floats print in round-trip-exact decimal form.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qotto/analysis.hpp"
#include "qotto/majorization.hpp"
#include "qotto/numeric.hpp"
#include "qotto/spectrum.hpp"
#include "qotto/thermo.hpp"

namespace qotto {

struct SweepSpec {
  EnergySpectrum hot;
  EnergySpectrum cold;
  double t_hot;
  double lo;
  double hi;
  int points = 181;
  double tol = classify_tol;
};

struct SweepRow {
  double t2 = 0.0;
  double w = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  std::optional<double> eta;
  double dp1 = 0.0;
  double dp3 = 0.0;
  ProbabilityCase prob_case = ProbabilityCase::boundary;
  GapSummary cond = GapSummary::mixed;
  MajorizationVerdict maj = MajorizationVerdict::incomparable;
  double xi1 = 0.0;
  double xi2 = 0.0;
};

inline void validate_sweep_spec(const SweepSpec& s) {
  if (s.hot.size() != 3 || s.cold.size() != 3)
    throw std::invalid_argument("sweep needs 3-level spectra, got " +
                                std::to_string(s.hot.size()) + " and " +
                                std::to_string(s.cold.size()) + " levels");
  if (!(s.lo < s.hi))
    throw std::invalid_argument("sweep needs lo < hi, got lo = " +
                                fmt_double(s.lo) + ", hi = " + fmt_double(s.hi));
  if (s.points < 2)
    throw std::invalid_argument("sweep needs at least 2 points, got " +
                                std::to_string(s.points));
  if (!(s.lo > 0.0))
    throw std::invalid_argument("sweep needs t2 > 0 across the range, got lo = " +
                                fmt_double(s.lo));
  if (!(s.hi < s.t_hot))
    throw std::invalid_argument(
        "sweep needs t2 < t1 across the range, got hi = " + fmt_double(s.hi) +
        ", t1 = " + fmt_double(s.t_hot));
}

// One row, recomputed from scratch; run_sweep emits exactly this per grid
// point so rows are bit-reproducible in isolation.
inline SweepRow sweep_row(const EnergySpectrum& hot, const EnergySpectrum& cold,
                          double t_hot, double t2, double tol = classify_tol) {
  const OttoCycle cycle(hot, cold, t_hot, t2);
  const RegimeReport rep = regime_report(cycle, tol);
  SweepRow r;
  r.t2 = t2;
  r.w = rep.outcome.work_net;
  r.q1 = rep.outcome.q_hot;
  r.q2 = rep.outcome.q_cold;
  r.eta = rep.outcome.efficiency;
  r.dp1 = rep.dp1;
  r.dp3 = rep.dp3;
  r.prob_case = rep.prob_case;
  r.cond = rep.gap_condition.summary;
  r.maj = rep.majorization;
  r.xi1 = rep.xi[0];
  r.xi2 = rep.xi[1];
  return r;
}

inline std::vector<SweepRow> run_sweep(const SweepSpec& s) {
  validate_sweep_spec(s);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(s.points));
  for (int i = 0; i < s.points; ++i) {
    const double t2 = s.lo + (s.hi - s.lo) * static_cast<double>(i) /
                                 static_cast<double>(s.points - 1);
    rows.push_back(sweep_row(s.hot, s.cold, s.t_hot, t2, s.tol));
  }
  return rows;
}

enum class FigurePreset { fig3, fig4, fig5, fig6 };

inline FigurePreset parse_preset(std::string_view name) {
  if (name == "fig3") return FigurePreset::fig3;
  if (name == "fig4") return FigurePreset::fig4;
  if (name == "fig5") return FigurePreset::fig5;
  if (name == "fig6") return FigurePreset::fig6;
  throw std::invalid_argument("unknown preset '" + std::string(name) +
                              "' (expected fig3, fig4, fig5, or fig6)");
}

// fig3: both gaps shrink; engine region strictly contains the majorization
//       region. fig5 reuses it (its columns carry eta, xi1, xi2 anyway).
// fig4: lower gap shrinks, upper expands; engine region sits strictly inside
//       the majorization region.
// fig6: lower gap fixed; engine region equals the majorization region.
inline SweepSpec figure_spec(FigurePreset p) {
  switch (p) {
    case FigurePreset::fig3:
    case FigurePreset::fig5:
      return SweepSpec{build_family(Family::fig_a, 5.0, 2.0),
                       build_family(Family::fig_a, 3.0, 2.0), 4.0, 0.2, 3.8};
    case FigurePreset::fig4:
      return SweepSpec{build_family(Family::fig_b, 5.0, 6.0),
                       build_family(Family::fig_b, 3.0, 6.0), 4.0, 0.2, 3.8};
    case FigurePreset::fig6:
      return SweepSpec{build_family(Family::fig_c, 1.0, 4.0),
                       build_family(Family::fig_c, 1.0, 2.0), 4.0, 0.2, 3.8};
  }
  throw std::invalid_argument("unknown preset");
}

inline std::string csv_header() {
  return "t2,w,q1,q2,eta,dp1,dp3,case,cond,maj,xi1,xi2";
}

inline std::string csv_line(const SweepRow& r) {
  std::string s;
  s += fmt_double(r.t2);
  s += ',';
  s += fmt_double(r.w);
  s += ',';
  s += fmt_double(r.q1);
  s += ',';
  s += fmt_double(r.q2);
  s += ',';
  if (r.eta) s += fmt_double(*r.eta);
  s += ',';
  s += fmt_double(r.dp1);
  s += ',';
  s += fmt_double(r.dp3);
  s += ',';
  s += token(r.prob_case);
  s += ',';
  s += token(r.cond);
  s += ',';
  s += token(r.maj);
  s += ',';
  s += fmt_double(r.xi1);
  s += ',';
  s += fmt_double(r.xi2);
  return s;
}

inline std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string s = csv_header();
  s += '\n';
  for (const auto& r : rows) {
    s += csv_line(r);
    s += '\n';
  }
  return s;
}

}  // namespace qotto
