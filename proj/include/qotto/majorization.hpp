#pragma once
// Majorization order on probability vectors plus the discrete classifiers
// for an Otto cycle: occupation-shift case (a-d), gap-change condition, and
// the hot-vs-cold majorization verdict.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qotto/numeric.hpp"
#include "qotto/spectrum.hpp"

namespace qotto {

// True when q majorizes p: prefix sums of the decreasingly sorted entries of
// q dominate those of p, each comparison slackened by tol. Inputs must be
// equal-length probability vectors normalized to 1e-9; the final prefix
// compares the totals the normalization gate already pins, so it is skipped
// rather than letting accumulation noise decide it.
inline bool majorizes(const std::vector<double>& q, const std::vector<double>& p,
                      double tol) {
  if (q.size() != p.size())
    throw std::invalid_argument("majorizes needs equal lengths, got " +
                                std::to_string(q.size()) + " and " +
                                std::to_string(p.size()));
  if (q.empty()) throw std::invalid_argument("majorizes needs non-empty vectors");
  if (!(tol >= 0.0))
    throw std::invalid_argument("majorizes tolerance must be >= 0, got " +
                                fmt_double(tol));
  for (const auto* v : {&q, &p}) {
    double sum = 0.0;
    for (double x : *v) sum += x;
    if (std::fabs(sum - 1.0) > 1e-9)
      throw std::invalid_argument("majorizes input not normalized: sum = " +
                                  fmt_double(sum));
  }
  std::vector<double> qs = q;
  std::vector<double> ps = p;
  std::sort(qs.begin(), qs.end(), std::greater<double>());
  std::sort(ps.begin(), ps.end(), std::greater<double>());
  double aq = 0.0;
  double ap = 0.0;
  for (std::size_t k = 0; k + 1 < qs.size(); ++k) {
    aq += qs[k];
    ap += ps[k];
    if (aq < ap - tol) return false;
  }
  return true;
}

// Tokens: "P<P'" when the cold-side state majorizes the hot-side state
// (hot is the majorized one), "P'<P" for the reverse.
enum class MajorizationVerdict {
  cold_majorizes_hot,
  hot_majorizes_cold,
  equal,
  incomparable
};

inline MajorizationVerdict majorization_verdict(const std::vector<double>& hot,
                                                const std::vector<double>& cold,
                                                double tol = classify_tol) {
  const bool cm = majorizes(cold, hot, tol);
  const bool hm = majorizes(hot, cold, tol);
  if (cm && hm) return MajorizationVerdict::equal;
  if (cm) return MajorizationVerdict::cold_majorizes_hot;
  if (hm) return MajorizationVerdict::hot_majorizes_cold;
  return MajorizationVerdict::incomparable;
}

inline std::string_view token(MajorizationVerdict v) {
  switch (v) {
    case MajorizationVerdict::cold_majorizes_hot: return "P<P'";
    case MajorizationVerdict::hot_majorizes_cold: return "P'<P";
    case MajorizationVerdict::equal: return "equal";
    case MajorizationVerdict::incomparable: return "incomparable";
  }
  return "?";
}

// Sign pattern of the ground and top occupation shifts between the hot state
// P and the cold state P' (3-level definition, with a = P1-P1', c = P3-P3'):
//   case_a: a > 0 and c > 0     case_b: a < 0 and c < 0
//   case_c: a < 0 and c > 0     case_d: a > 0 and c < 0
// boundary when either shift is within tol of zero.
enum class ProbabilityCase { case_a, case_b, case_c, case_d, boundary };

inline std::string_view token(ProbabilityCase c) {
  switch (c) {
    case ProbabilityCase::case_a: return "a";
    case ProbabilityCase::case_b: return "b";
    case ProbabilityCase::case_c: return "c";
    case ProbabilityCase::case_d: return "d";
    case ProbabilityCase::boundary: return "boundary";
  }
  return "?";
}

// For n != 3 the pattern is read off the majorization verdict (strict cold
// majorization plays the case_c role, strict hot majorization case_d) with
// the ground shift sign splitting the incomparable pairs into a vs b.
inline ProbabilityCase classify_probability_case(const std::vector<double>& hot,
                                                 const std::vector<double>& cold,
                                                 double tol = classify_tol) {
  if (hot.size() != cold.size())
    throw std::invalid_argument("probability case needs equal lengths, got " +
                                std::to_string(hot.size()) + " and " +
                                std::to_string(cold.size()));
  if (hot.size() < 2)
    throw std::invalid_argument("probability case needs at least 2 entries");
  const double a = hot.front() - cold.front();
  if (hot.size() == 3) {
    const double c = hot.back() - cold.back();
    if (std::fabs(a) <= tol || std::fabs(c) <= tol) return ProbabilityCase::boundary;
    if (a > 0.0) return c > 0.0 ? ProbabilityCase::case_a : ProbabilityCase::case_d;
    return c > 0.0 ? ProbabilityCase::case_c : ProbabilityCase::case_b;
  }
  switch (majorization_verdict(hot, cold, tol)) {
    case MajorizationVerdict::equal: return ProbabilityCase::boundary;
    case MajorizationVerdict::cold_majorizes_hot: return ProbabilityCase::case_c;
    case MajorizationVerdict::hot_majorizes_cold: return ProbabilityCase::case_d;
    case MajorizationVerdict::incomparable: break;
  }
  if (std::fabs(a) <= tol) return ProbabilityCase::boundary;
  return a > 0.0 ? ProbabilityCase::case_a : ProbabilityCase::case_b;
}

enum class GapChange { shrinks, expands, fixed };

// Three-level summary of how the gaps move from hot to cold spectrum:
//   cond1 both shrink, cond2 lower shrinks / upper expands,
//   cond3 lower expands / upper shrinks, cond4 both expand,
//   fixed_lower / fixed_upper when exactly that gap is unchanged.
// For other n, cond1/cond4 keep the all-shrink/all-expand meaning and
// everything else (including all-fixed) reports mixed.
enum class GapSummary { cond1, cond2, cond3, cond4, fixed_lower, fixed_upper, mixed };

inline std::string_view token(GapSummary s) {
  switch (s) {
    case GapSummary::cond1: return "1";
    case GapSummary::cond2: return "2";
    case GapSummary::cond3: return "3";
    case GapSummary::cond4: return "4";
    case GapSummary::fixed_lower: return "fixed-lower";
    case GapSummary::fixed_upper: return "fixed-upper";
    case GapSummary::mixed: return "mixed";
  }
  return "?";
}

struct GapCondition {
  std::vector<GapChange> per_gap;
  GapSummary summary = GapSummary::mixed;
};

// A gap counts as fixed when |hot - cold| <= tol * max(|hot|, |cold|).
inline GapCondition classify_gap_condition(const GapVector& hot,
                                           const GapVector& cold,
                                           double tol = classify_tol) {
  if (hot.gaps.size() != cold.gaps.size())
    throw std::invalid_argument("gap condition needs equal gap counts, got " +
                                std::to_string(hot.gaps.size()) + " and " +
                                std::to_string(cold.gaps.size()));
  GapCondition out;
  out.per_gap.reserve(hot.gaps.size());
  for (std::size_t j = 0; j < hot.gaps.size(); ++j) {
    const double d = hot.gaps[j] - cold.gaps[j];
    const double thresh = tol * std::max(std::fabs(hot.gaps[j]), std::fabs(cold.gaps[j]));
    if (std::fabs(d) <= thresh)
      out.per_gap.push_back(GapChange::fixed);
    else
      out.per_gap.push_back(d > 0.0 ? GapChange::shrinks : GapChange::expands);
  }
  const auto all_are = [&](GapChange g) {
    return std::all_of(out.per_gap.begin(), out.per_gap.end(),
                       [g](GapChange x) { return x == g; });
  };
  if (all_are(GapChange::shrinks)) {
    out.summary = GapSummary::cond1;
  } else if (all_are(GapChange::expands)) {
    out.summary = GapSummary::cond4;
  } else if (out.per_gap.size() == 2) {
    const GapChange lo = out.per_gap[0];
    const GapChange up = out.per_gap[1];
    if (lo == GapChange::fixed && up != GapChange::fixed)
      out.summary = GapSummary::fixed_lower;
    else if (up == GapChange::fixed && lo != GapChange::fixed)
      out.summary = GapSummary::fixed_upper;
    else if (lo == GapChange::shrinks && up == GapChange::expands)
      out.summary = GapSummary::cond2;
    else if (lo == GapChange::expands && up == GapChange::shrinks)
      out.summary = GapSummary::cond3;
    else
      out.summary = GapSummary::mixed;
  } else {
    out.summary = GapSummary::mixed;
  }
  return out;
}

}  // namespace qotto
