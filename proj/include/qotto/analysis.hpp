#pragma once
// Regime analysis for Otto cycles: operation mode, per-case inequality
// consequences, ratio chains, efficiency bounds, and the fixed-total-gap
// work identity for 3-level cycles.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qotto/majorization.hpp"
#include "qotto/numeric.hpp"
#include "qotto/spectrum.hpp"
#include "qotto/thermo.hpp"

namespace qotto {

// Sign pattern of (q_hot, q_cold, work_net), signs taken beyond
// tol * max(1, |q_hot|, |q_cold|):
//   engine       q_hot > 0, q_cold < 0, work_net > 0
//   accelerator  q_hot > 0, q_cold < 0, work_net <= 0 (includes pure
//                conduction at work_net = 0)
//   refrigerator q_hot < 0, q_cold > 0 (work_net < 0 follows)
//   heater       q_hot <= 0 and q_cold <= 0, not all zero
//   idle         all within tolerance of zero
enum class Mode { engine, refrigerator, heater, accelerator, idle };

inline std::string_view token(Mode m) {
  switch (m) {
    case Mode::engine: return "engine";
    case Mode::refrigerator: return "refrigerator";
    case Mode::heater: return "heater";
    case Mode::accelerator: return "accelerator";
    case Mode::idle: return "idle";
  }
  return "?";
}

inline Mode classify_mode(const CycleOutcome& o, double tol = classify_tol) {
  const double scale = std::max({1.0, std::fabs(o.q_hot), std::fabs(o.q_cold)});
  const auto sign = [&](double x) {
    if (std::fabs(x) <= tol * scale) return 0;
    return x > 0.0 ? 1 : -1;
  };
  const int s1 = sign(o.q_hot);
  const int s2 = sign(o.q_cold);
  const int sw = sign(o.work_net);
  if (s1 == 0 && s2 == 0 && sw == 0) return Mode::idle;
  if (s1 > 0 && s2 <= 0) return sw > 0 ? Mode::engine : Mode::accelerator;
  if (s1 < 0 && s2 > 0) return Mode::refrigerator;
  if (s1 <= 0 && s2 <= 0) return Mode::heater;
  // q_hot and q_cold both positive cannot arise from Gibbs endpoints.
  return sw > 0 ? Mode::engine : Mode::accelerator;
}

enum class CheckStatus { pass, fail, skipped };

inline std::string_view token(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skip";
  }
  return "?";
}

// One evaluated inequality: slack = lhs - rhs (> 0 means pass) when the
// check ran; note carries the skip reason or extra context.
struct InequalityCheck {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  double slack = 0.0;
  std::string note;
};

inline InequalityCheck evaluated(std::string name, double slack,
                                 std::string note = "") {
  return InequalityCheck{std::move(name),
                         slack > 0.0 ? CheckStatus::pass : CheckStatus::fail,
                         slack, std::move(note)};
}

inline InequalityCheck skipped(std::string name, std::string why) {
  return InequalityCheck{std::move(name), CheckStatus::skipped, 0.0,
                         std::move(why)};
}

inline bool all_pass(const std::vector<InequalityCheck>& checks) {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

// Efficiency bounds from the fractional gap shrinks xi_j = (w_j - w'_j)/w_j.
// Which bound applies depends on the probability case and, within case c,
// on the ordering of the gap ratios w2/w1 vs w2'/w1'.
struct BoundReport {
  bool applicable = false;
  std::string label;
  double xi1 = 0.0;
  double xi2 = 0.0;
  std::optional<double> eta;
  std::vector<InequalityCheck> checks;
};

struct RegimeReport {
  CycleOutcome outcome;
  Mode mode = Mode::idle;
  ProbabilityCase prob_case = ProbabilityCase::boundary;
  GapCondition gap_condition;
  MajorizationVerdict majorization = MajorizationVerdict::incomparable;
  double dp1 = 0.0;  // P1' - P1 (cold minus hot, ground level)
  double dp3 = 0.0;  // P3 - P3' (hot minus cold, top level)
  std::vector<double> xi;
  std::vector<InequalityCheck> checks;
  BoundReport bounds;
};

namespace detail {

struct CycleView {
  ThermalState hot_state;
  ThermalState cold_state;
  GapVector hot_gaps;
  GapVector cold_gaps;
  CycleOutcome outcome;
  ProbabilityCase prob_case;
  GapCondition gap_condition;
  Mode mode;

  CycleView(const OttoCycle& c, double tol)
      : hot_state(gibbs_state(c.hot, c.t_hot)),
        cold_state(gibbs_state(c.cold, c.t_cold)),
        hot_gaps(gaps_of(c.hot)),
        cold_gaps(gaps_of(c.cold)),
        outcome(cycle_outcome(c)),
        prob_case(classify_probability_case(hot_state.probabilities,
                                            cold_state.probabilities, tol)),
        gap_condition(classify_gap_condition(hot_gaps, cold_gaps, tol)),
        mode(classify_mode(outcome, tol)) {}
};

}  // namespace detail

inline BoundReport efficiency_bounds(const OttoCycle& cycle,
                                     double tol = classify_tol) {
  BoundReport r;
  if (cycle.hot.size() != 3) {
    r.label = "bounds defined for 3-level cycles only";
    return r;
  }
  const detail::CycleView v(cycle, tol);
  r.xi1 = (v.hot_gaps.gaps[0] - v.cold_gaps.gaps[0]) / v.hot_gaps.gaps[0];
  r.xi2 = (v.hot_gaps.gaps[1] - v.cold_gaps.gaps[1]) / v.hot_gaps.gaps[1];
  if (v.mode != Mode::engine) {
    r.label = std::string("not applicable: mode is ") + std::string(token(v.mode));
    return r;
  }
  r.applicable = true;
  r.eta = v.outcome.efficiency;
  const double eta = *r.eta;
  switch (v.prob_case) {
    case ProbabilityCase::case_a:
      r.label = "eta < xi2 < xi1";
      r.checks.push_back(evaluated("eta < xi2", r.xi2 - eta));
      r.checks.push_back(evaluated("xi2 < xi1", r.xi1 - r.xi2));
      return r;
    case ProbabilityCase::case_b:
      r.label = "eta < xi1 < xi2";
      r.checks.push_back(evaluated("eta < xi1", r.xi1 - eta));
      r.checks.push_back(evaluated("xi1 < xi2", r.xi2 - r.xi1));
      return r;
    case ProbabilityCase::case_c: {
      const double rh = v.hot_gaps.gaps[1] / v.hot_gaps.gaps[0];
      const double rc = v.cold_gaps.gaps[1] / v.cold_gaps.gaps[0];
      const double thresh = tol * std::max(rh, rc);
      if (rh < rc - thresh) {
        r.label = "xi2 < eta < xi1";
        r.checks.push_back(evaluated("xi2 < eta", eta - r.xi2));
        r.checks.push_back(evaluated("eta < xi1", r.xi1 - eta));
      } else if (rh > rc + thresh) {
        r.label = "xi1 < eta < xi2";
        r.checks.push_back(evaluated("xi1 < eta", eta - r.xi1));
        r.checks.push_back(evaluated("eta < xi2", r.xi2 - eta));
      } else {
        // Equal shrink ratio collapses both bounds onto the efficiency.
        r.label = "eta = xi1 = xi2";
        r.checks.push_back(evaluated("|eta - xi1| <= tol",
                                     tol - std::fabs(eta - r.xi1)));
        r.checks.push_back(evaluated("|eta - xi2| <= tol",
                                     tol - std::fabs(eta - r.xi2)));
      }
      return r;
    }
    case ProbabilityCase::case_d:
      r.label = "unexpected: engine under case d";
      return r;
    case ProbabilityCase::boundary:
      r.label = "boundary case; bounds not asserted";
      return r;
  }
  return r;
}

namespace detail {

// Ratio chain links shared by regime_report. Denominator guards: the top
// occupation shift and any gap-difference denominator must exceed tol in the
// orientation the chain assumes, else the link is skipped.
inline void append_ratio_checks(const CycleView& v, double tol,
                                std::vector<InequalityCheck>& out) {
  const double w1 = v.hot_gaps.gaps[0];
  const double w2 = v.hot_gaps.gaps[1];
  const double w1c = v.cold_gaps.gaps[0];
  const double w2c = v.cold_gaps.gaps[1];
  const double d1 = w1 - w1c;
  const double d2 = w2 - w2c;
  const double a = v.hot_state.probabilities[0] - v.cold_state.probabilities[0];
  const double c = v.hot_state.probabilities[2] - v.cold_state.probabilities[2];
  const double scale = std::max({1.0, std::fabs(v.outcome.q_hot),
                                 std::fabs(v.outcome.q_cold)});
  const auto sign = [&](double x) {
    if (std::fabs(x) <= tol * scale) return 0;
    return x > 0.0 ? 1 : -1;
  };
  const double d1_thresh = tol * std::max(std::fabs(w1), std::fabs(w1c));
  const bool c_pos = c > tol;
  const bool d1_pos = d1 > d1_thresh;

  if (sign(v.outcome.q_hot) <= 0) {
    out.push_back(skipped("w2/w1 > (P1-P1')/(P3-P3')", "q_hot not positive"));
  } else if (!c_pos) {
    out.push_back(skipped("w2/w1 > (P1-P1')/(P3-P3')",
                          "P3-P3' not positive beyond tol"));
  } else {
    out.push_back(evaluated("w2/w1 > (P1-P1')/(P3-P3')", w2 / w1 - a / c));
  }

  if (sign(v.outcome.q_cold) >= 0) {
    out.push_back(skipped("w2'/w1' > (P1-P1')/(P3-P3')", "q_cold not negative"));
  } else if (!c_pos) {
    out.push_back(skipped("w2'/w1' > (P1-P1')/(P3-P3')",
                          "P3-P3' not positive beyond tol"));
  } else {
    out.push_back(evaluated("w2'/w1' > (P1-P1')/(P3-P3')", w2c / w1c - a / c));
  }

  if (sign(v.outcome.work_net) <= 0) {
    out.push_back(skipped("(w2-w2')/(w1-w1') > (P1-P1')/(P3-P3')",
                          "work_net not positive"));
  } else if (!d1_pos) {
    out.push_back(skipped("(w2-w2')/(w1-w1') > (P1-P1')/(P3-P3')",
                          "w1-w1' not positive beyond tol"));
  } else if (!c_pos) {
    out.push_back(skipped("(w2-w2')/(w1-w1') > (P1-P1')/(P3-P3')",
                          "P3-P3' not positive beyond tol"));
  } else {
    out.push_back(evaluated("(w2-w2')/(w1-w1') > (P1-P1')/(P3-P3')",
                            d2 / d1 - a / c));
  }

  if (v.prob_case == ProbabilityCase::case_a) {
    out.push_back(evaluated("chain a: w2'/w1' > w2/w1", w2c / w1c - w2 / w1));
    if (d1_pos) {
      out.push_back(evaluated("chain a: w2/w1 > (w2-w2')/(w1-w1')",
                              w2 / w1 - d2 / d1));
      if (c_pos)
        out.push_back(evaluated("chain a: (w2-w2')/(w1-w1') > (P1-P1')/(P3-P3')",
                                d2 / d1 - a / c));
      else
        out.push_back(skipped("chain a: (w2-w2')/(w1-w1') > (P1-P1')/(P3-P3')",
                              "P3-P3' not positive beyond tol"));
    } else {
      out.push_back(skipped("chain a: w2/w1 > (w2-w2')/(w1-w1')",
                            "w1-w1' not positive beyond tol"));
      out.push_back(skipped("chain a: (w2-w2')/(w1-w1') > (P1-P1')/(P3-P3')",
                            "w1-w1' not positive beyond tol"));
    }
  }

  if (v.prob_case == ProbabilityCase::case_b) {
    // On case-b engine points the probability ratio tops the chain: dividing
    // the heat inequalities by P3-P3' < 0 reverses them.
    if (d1_pos) {
      out.push_back(evaluated("chain b: (P1-P1')/(P3-P3') > (w2-w2')/(w1-w1')",
                              a / c - d2 / d1));
      out.push_back(evaluated("chain b: (w2-w2')/(w1-w1') > w2/w1",
                              d2 / d1 - w2 / w1));
    } else {
      out.push_back(skipped("chain b: (P1-P1')/(P3-P3') > (w2-w2')/(w1-w1')",
                            "w1-w1' not positive beyond tol"));
      out.push_back(skipped("chain b: (w2-w2')/(w1-w1') > w2/w1",
                            "w1-w1' not positive beyond tol"));
    }
    out.push_back(evaluated("chain b: w2/w1 > w2'/w1'", w2 / w1 - w2c / w1c));
    out.push_back(evaluated("chain b: (P1-P1')/(P3-P3') > 0", a / c));
  }

  if (v.mode == Mode::engine) {
    out.push_back(InequalityCheck{
        "engine => gap condition != 4",
        v.gap_condition.summary != GapSummary::cond4 ? CheckStatus::pass
                                                     : CheckStatus::fail,
        0.0, std::string(token(v.gap_condition.summary))});
  }
}

}  // namespace detail

inline RegimeReport regime_report(const OttoCycle& cycle,
                                  double tol = classify_tol) {
  const detail::CycleView v(cycle, tol);
  RegimeReport r;
  r.outcome = v.outcome;
  r.mode = v.mode;
  r.prob_case = v.prob_case;
  r.gap_condition = v.gap_condition;
  r.majorization = majorization_verdict(v.hot_state.probabilities,
                                        v.cold_state.probabilities, tol);
  r.dp1 = v.cold_state.probabilities.front() - v.hot_state.probabilities.front();
  r.dp3 = v.hot_state.probabilities.back() - v.cold_state.probabilities.back();
  r.xi.reserve(v.hot_gaps.gaps.size());
  for (std::size_t j = 0; j < v.hot_gaps.gaps.size(); ++j)
    r.xi.push_back((v.hot_gaps.gaps[j] - v.cold_gaps.gaps[j]) / v.hot_gaps.gaps[j]);
  if (cycle.hot.size() == 3) {
    detail::append_ratio_checks(v, tol, r.checks);
    r.bounds = efficiency_bounds(cycle, tol);
  } else {
    r.bounds.label = "bounds defined for 3-level cycles only";
  }
  return r;
}

// Consequences of classifying as case a (ground and top occupations both
// higher on the hot side). "w2 > w2'" needs the positive work condition on
// top of case a; the others are unconditional for Gibbs endpoints.
inline std::vector<InequalityCheck> check_case_a_consequences(
    const OttoCycle& cycle, double tol = classify_tol) {
  std::vector<InequalityCheck> out;
  if (cycle.hot.size() != 3) {
    out.push_back(skipped("case a consequences", "needs a 3-level cycle"));
    return out;
  }
  const detail::CycleView v(cycle, tol);
  if (v.prob_case != ProbabilityCase::case_a) {
    out.push_back(skipped("case a consequences",
                          "not applicable: case is " +
                              std::string(token(v.prob_case))));
    return out;
  }
  const double w1 = v.hot_gaps.gaps[0], w2 = v.hot_gaps.gaps[1];
  const double w1c = v.cold_gaps.gaps[0], w2c = v.cold_gaps.gaps[1];
  const double tr = cycle.t_hot / cycle.t_cold;
  out.push_back(evaluated("w1 > w1'", w1 - w1c));
  out.push_back(evaluated("w2 > w2'", w2 - w2c,
                          "guaranteed only under the positive work condition"));
  out.push_back(evaluated("(t1/t2) w2' > w2", tr * w2c - w2));
  out.push_back(evaluated("w2'/w1' > w2/w1", w2c / w1c - w2 / w1));
  return out;
}

// Mirror consequences for case b; here "w1 > w1'" is the one needing the
// positive work condition.
inline std::vector<InequalityCheck> check_case_b_consequences(
    const OttoCycle& cycle, double tol = classify_tol) {
  std::vector<InequalityCheck> out;
  if (cycle.hot.size() != 3) {
    out.push_back(skipped("case b consequences", "needs a 3-level cycle"));
    return out;
  }
  const detail::CycleView v(cycle, tol);
  if (v.prob_case != ProbabilityCase::case_b) {
    out.push_back(skipped("case b consequences",
                          "not applicable: case is " +
                              std::string(token(v.prob_case))));
    return out;
  }
  const double w1 = v.hot_gaps.gaps[0], w2 = v.hot_gaps.gaps[1];
  const double w1c = v.cold_gaps.gaps[0], w2c = v.cold_gaps.gaps[1];
  const double tr = cycle.t_hot / cycle.t_cold;
  out.push_back(evaluated("w2 > w2'", w2 - w2c));
  out.push_back(evaluated("(t1/t2) w1' > w1", tr * w1c - w1));
  out.push_back(evaluated("w1 > w1'", w1 - w1c,
                          "guaranteed only under the positive work condition"));
  out.push_back(evaluated("w2/w1 > w2'/w1'", w2 / w1 - w2c / w1c));
  return out;
}

// Case c (cold state majorizes hot state) feasibility: the total gap must
// shrink relative to temperature, and an engine cannot sit on cond 4.
inline std::vector<InequalityCheck> check_case_c_feasibility(
    const OttoCycle& cycle, double tol = classify_tol) {
  std::vector<InequalityCheck> out;
  if (cycle.hot.size() != 3) {
    out.push_back(skipped("case c feasibility", "needs a 3-level cycle"));
    return out;
  }
  const detail::CycleView v(cycle, tol);
  if (v.prob_case != ProbabilityCase::case_c) {
    out.push_back(skipped("case c feasibility",
                          "not applicable: case is " +
                              std::string(token(v.prob_case))));
    return out;
  }
  out.push_back(evaluated("(w1+w2)/t1 < (w1'+w2')/t2",
                          v.cold_gaps.total / cycle.t_cold -
                              v.hot_gaps.total / cycle.t_hot));
  out.push_back(InequalityCheck{"gap condition", CheckStatus::pass, 0.0,
                                std::string(token(v.gap_condition.summary))});
  if (v.mode == Mode::engine) {
    out.push_back(InequalityCheck{
        "engine => gap condition != 4",
        v.gap_condition.summary != GapSummary::cond4 ? CheckStatus::pass
                                                     : CheckStatus::fail,
        0.0, std::string(token(v.gap_condition.summary))});
  } else {
    out.push_back(skipped("engine => gap condition != 4", "not an engine"));
  }
  return out;
}

// When the total spectral width is unchanged (w1+w2 == w1'+w2' within tol,
// relative), the 3-level work collapses to a single product:
//   work_net = (w2 - w2') (P2' - P2).
// For engines this pins the middle occupation shift: cond2 forces P2 > P2',
// cond3 forces P2 < P2'.
struct FixedTotalGapWork {
  bool applicable = false;
  double work_product = 0.0;
  double work_net = 0.0;
  bool identity_ok = false;
  InequalityCheck pairing;
};

inline FixedTotalGapWork fixed_total_gap_work(const OttoCycle& cycle,
                                              double tol = classify_tol) {
  FixedTotalGapWork r;
  r.pairing = skipped("engine sign pairing", "not applicable");
  if (cycle.hot.size() != 3) return r;
  const detail::CycleView v(cycle, tol);
  const double th = v.hot_gaps.total;
  const double tc = v.cold_gaps.total;
  if (std::fabs(th - tc) > tol * std::max(std::fabs(th), std::fabs(tc))) return r;
  r.applicable = true;
  const double d2 = v.hot_gaps.gaps[1] - v.cold_gaps.gaps[1];
  const double p2_shift =
      v.cold_state.probabilities[1] - v.hot_state.probabilities[1];
  r.work_product = d2 * p2_shift;
  r.work_net = v.outcome.work_net;
  r.identity_ok = rel_close(r.work_product, r.work_net, 1e-12);
  if (v.mode == Mode::engine) {
    if (v.gap_condition.summary == GapSummary::cond2)
      r.pairing = evaluated("engine on cond2: P2 > P2'", -p2_shift);
    else if (v.gap_condition.summary == GapSummary::cond3)
      r.pairing = evaluated("engine on cond3: P2 < P2'", p2_shift);
    else
      r.pairing = skipped("engine sign pairing",
                          "gap condition is " +
                              std::string(token(v.gap_condition.summary)));
  } else {
    r.pairing = skipped("engine sign pairing", "not an engine");
  }
  return r;
}

}  // namespace qotto
