#pragma once
// Randomized theorem verification: a deterministic seeded sampler draws Otto
// cycles from several strata and asserts the regime theorems on every
// applicable draw, producing a scoreboard plus witness examples.
//
// Noise policy: antecedents are gated at the classification tolerance (1e-9)
// with strict margins, while conclusions allow only float-noise slack
// (1e-12 scaled), so any recorded counterexample is real rather than
// roundoff. Boundary-classified points never count as counterexamples.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qotto/analysis.hpp"
#include "qotto/majorization.hpp"
#include "qotto/numeric.hpp"
#include "qotto/spectrum.hpp"
#include "qotto/thermo.hpp"

namespace qotto {

struct SamplerConfig {
  double t_lo = 0.1;
  double t_hi = 10.0;
  double level_lo = -10.0;
  double level_hi = 10.0;
  int n_min = 2;
  int n_max = 8;
};

// A sampled cycle stored in re-runnable form.
struct WitnessCycle {
  std::vector<double> hot;
  std::vector<double> cold;
  double t_hot = 0.0;
  double t_cold = 0.0;
  long trial = -1;
};

struct TheoremRecord {
  std::string name;
  std::string statement;
  long applicable = 0;
  long violations = 0;
  std::vector<WitnessCycle> counterexamples;  // capped at 5
};

struct WitnessRecord {
  std::string name;
  std::string statement;
  long count = 0;
  std::vector<WitnessCycle> samples;  // capped at 3
};

struct Scoreboard {
  std::uint64_t seed = 0;
  long trials = 0;
  SamplerConfig config;
  std::vector<TheoremRecord> theorems;
  std::vector<WitnessRecord> witnesses;
};

inline bool scoreboard_clean(const Scoreboard& sb) {
  for (const auto& t : sb.theorems)
    if (t.violations > 0) return false;
  return true;
}

namespace detail {

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// Well-separated stream origin per (seed, trial) so trials are independent
// of evaluation order.
inline std::uint64_t trial_stream(std::uint64_t seed, long trial) {
  std::uint64_t z =
      seed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(trial) + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::pair<double, double> draw_temps(SplitMix64& rng,
                                            const SamplerConfig& cfg) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    double t1 = rng.uniform(cfg.t_lo, cfg.t_hi);
    double t2 = rng.uniform(cfg.t_lo, cfg.t_hi);
    if (t1 < t2) std::swap(t1, t2);
    if (t1 - t2 >= 1e-3 * t1) return {t1, t2};
  }
  throw std::logic_error("temperature draw failed to separate");
}

inline std::vector<double> draw_levels(SplitMix64& rng, int n,
                                       const SamplerConfig& cfg) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> lv(static_cast<std::size_t>(n));
    for (double& x : lv) x = rng.uniform(cfg.level_lo, cfg.level_hi);
    std::sort(lv.begin(), lv.end());
    double min_gap = lv[1] - lv[0];
    for (std::size_t k = 2; k < lv.size(); ++k)
      min_gap = std::min(min_gap, lv[k] - lv[k - 1]);
    if (min_gap >= 1e-3) return lv;
  }
  throw std::logic_error("level draw failed to separate");
}

// Strata rotate with the trial index: general n-level pairs, random 3-level
// pairs, shared-J family pairs that shrink both gaps, shared-J family pairs
// that shrink one gap and expand the other, single-fixed-gap pairs, and
// fixed-total-width pairs.
inline WitnessCycle draw_cycle(std::uint64_t seed, long trial,
                               const SamplerConfig& cfg) {
  SplitMix64 rng(trial_stream(seed, trial));
  WitnessCycle w;
  w.trial = trial;
  const auto [t1, t2] = draw_temps(rng, cfg);
  w.t_hot = t1;
  w.t_cold = t2;
  switch (trial % 6) {
    case 0: {
      const int span = cfg.n_max - cfg.n_min + 1;
      const int n = cfg.n_min + static_cast<int>((trial / 6) % span);
      w.hot = draw_levels(rng, n, cfg);
      w.cold = draw_levels(rng, n, cfg);
      break;
    }
    case 1: {
      w.hot = draw_levels(rng, 3, cfg);
      w.cold = draw_levels(rng, 3, cfg);
      break;
    }
    case 2: {
      const double j = rng.uniform(-3.0, 3.0);
      const double bc = std::fabs(j) + rng.uniform(0.1, 4.0);
      const double bh = bc + rng.uniform(0.01, 3.0);
      w.hot = {-bh, -j, bh};
      w.cold = {-bc, -j, bc};
      break;
    }
    case 3: {
      const double bc = rng.uniform(0.2, 3.0);
      const double bh = bc + rng.uniform(0.01, 3.0);
      const double j = bh + rng.uniform(0.1, 3.0);
      w.hot = {-bh, bh, j};
      w.cold = {-bc, bc, j};
      break;
    }
    case 4: {
      if ((trial / 6) % 2 == 0) {
        const double g = rng.uniform(0.5, 4.0);
        const double uh = rng.uniform(0.05, 4.0);
        const double uc = rng.uniform(0.05, 4.0);
        w.hot = {0.0, g, g + uh};
        w.cold = {0.0, g, g + uc};
      } else {
        const double g = rng.uniform(0.5, 4.0);
        const double lh = rng.uniform(0.05, 4.0);
        const double lc = rng.uniform(0.05, 4.0);
        w.hot = {0.0, lh, lh + g};
        w.cold = {0.0, lc, lc + g};
      }
      break;
    }
    default: {
      const double tot = rng.uniform(1.0, 8.0);
      const double mh = tot * rng.uniform(0.1, 0.9);
      const double mc = tot * rng.uniform(0.1, 0.9);
      w.hot = {0.0, mh, tot};
      w.cold = {0.0, mc, tot};
      break;
    }
  }
  return w;
}

}  // namespace detail

// "cycle --hot ... --cold ... --t1 ... --t2 ..." with round-trip-exact
// numbers, directly re-runnable through the command-line tool.
inline std::string render_cycle_command(const WitnessCycle& w) {
  const auto join = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) s += ',';
      s += fmt_double(v[k]);
    }
    return s;
  };
  return "cycle --hot " + join(w.hot) + " --cold " + join(w.cold) + " --t1 " +
         fmt_double(w.t_hot) + " --t2 " + fmt_double(w.t_cold);
}

inline Scoreboard verify_theorems(const SamplerConfig& cfg, long trials,
                                  std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify needs trials >= 1");
  if (!(cfg.t_hi > cfg.t_lo) || !(cfg.t_lo > 0.0))
    throw std::invalid_argument("verify needs 0 < t_lo < t_hi");
  if (!(cfg.level_hi > cfg.level_lo))
    throw std::invalid_argument("verify needs level_lo < level_hi");
  if (cfg.n_min < 2 || cfg.n_max < cfg.n_min)
    throw std::invalid_argument("verify needs 2 <= n_min <= n_max");

  Scoreboard sb;
  sb.seed = seed;
  sb.trials = trials;
  sb.config = cfg;
  sb.theorems = {
      {"T1", "all gaps expand => work_net <= 0", 0, 0, {}},
      {"T2",
       "cold majorizes hot strictly, no gap expands, some gap shrinks => "
       "engine signs (q_hot >= 0, q_cold <= 0, work_net >= 0)",
       0,
       0,
       {}},
      {"T3",
       "engine with one gap shrinking and one expanding (n=3) => case c",
       0,
       0,
       {}},
      {"T4", "positive work and case a or b (n=3) => both gaps shrink", 0, 0, {}},
      {"T5", "cold majorizes hot => q_hot >= 0 and q_cold <= 0", 0, 0, {}},
      {"T6", "engine with exactly one fixed gap (n=3) => case c", 0, 0, {}},
      {"FL", "first law: q_hot + q_cold == work_net (1e-12 relative)", 0, 0, {}},
      {"GF", "gap/tail-sum forms equal level forms (1e-12 relative)", 0, 0, {}},
  };
  sb.witnesses = {
      {"non-necessity", "engine points classified case a or b (cond 1)", 0, {}},
      {"non-sufficiency",
       "case c points under mixed gap change that are not engines",
       0,
       {}},
  };

  TheoremRecord& t1 = sb.theorems[0];
  TheoremRecord& t2 = sb.theorems[1];
  TheoremRecord& t3 = sb.theorems[2];
  TheoremRecord& t4 = sb.theorems[3];
  TheoremRecord& t5 = sb.theorems[4];
  TheoremRecord& t6 = sb.theorems[5];
  TheoremRecord& fl = sb.theorems[6];
  TheoremRecord& gf = sb.theorems[7];
  WitnessRecord& w_nn = sb.witnesses[0];
  WitnessRecord& w_ns = sb.witnesses[1];

  const auto record = [](TheoremRecord& t, bool ok, const WitnessCycle& w) {
    ++t.applicable;
    if (!ok) {
      ++t.violations;
      if (t.counterexamples.size() < 5) t.counterexamples.push_back(w);
    }
  };

  for (long trial = 0; trial < trials; ++trial) {
    const WitnessCycle w = detail::draw_cycle(seed, trial, cfg);
    const OttoCycle cycle(EnergySpectrum(w.hot), EnergySpectrum(w.cold),
                          w.t_hot, w.t_cold);
    const ThermalState hot = gibbs_state(cycle.hot, cycle.t_hot);
    const ThermalState cold = gibbs_state(cycle.cold, cycle.t_cold);
    const CycleOutcome out = cycle_outcome(cycle);
    const GapFormHeats gap = heats_gap_form(cycle);
    const GapVector gh = gaps_of(cycle.hot);
    const GapVector gc = gaps_of(cycle.cold);
    const std::size_t n = cycle.hot.size();

    const double scale = std::max({1.0, std::fabs(out.q_hot), std::fabs(out.q_cold)});
    const double nu = 1e-12 * scale;

    record(fl, std::fabs(out.q_hot + out.q_cold - out.work_net) <= nu, w);
    record(gf, rel_close(gap.q_hot, out.q_hot, 1e-12) &&
                   rel_close(gap.q_cold, out.q_cold, 1e-12) &&
                   rel_close(gap.work_net, out.work_net, 1e-12),
           w);

    int shrink_strict = 0;
    int expand_strict = 0;
    int fixed_count = 0;
    bool none_expand = true;
    bool all_expand_strict = true;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const double d = gh.gaps[j] - gc.gaps[j];
      const double relt = 1e-9 * std::max(std::fabs(gh.gaps[j]), std::fabs(gc.gaps[j]));
      if (d > relt) ++shrink_strict;
      if (d < -relt) {
        ++expand_strict;
        none_expand = false;
      } else if (d >= -relt && d <= relt) {
        ++fixed_count;
      }
      if (!(d < -relt)) all_expand_strict = false;
    }
    bool both_shrink_noise = true;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const double d = gh.gaps[j] - gc.gaps[j];
      const double relt = 1e-9 * std::max(std::fabs(gh.gaps[j]), std::fabs(gc.gaps[j]));
      if (!(d > -relt)) both_shrink_noise = false;
    }

    bool all_tails_pos = true;
    double tail = 0.0;
    std::vector<double> tails(n - 1, 0.0);
    for (std::size_t j = n - 1; j-- > 0;) {
      tail += hot.probabilities[j + 1] - cold.probabilities[j + 1];
      tails[j] = tail;
      if (!(tail > 1e-9)) all_tails_pos = false;
    }

    const ProbabilityCase pc = classify_probability_case(
        hot.probabilities, cold.probabilities, classify_tol);
    const bool engine_strict =
        out.q_hot > nu && out.q_cold < -nu && out.work_net > nu;

    if (all_expand_strict) record(t1, out.work_net <= nu, w);

    if (all_tails_pos && none_expand && shrink_strict >= 1)
      record(t2, out.q_hot > -nu && out.q_cold < nu && out.work_net > -nu, w);

    if (n == 3 && engine_strict && shrink_strict == 1 && expand_strict == 1 &&
        pc != ProbabilityCase::boundary)
      record(t3, pc == ProbabilityCase::case_c, w);

    if (n == 3 && out.work_net > nu &&
        (pc == ProbabilityCase::case_a || pc == ProbabilityCase::case_b))
      record(t4, both_shrink_noise, w);

    if (majorizes(cold.probabilities, hot.probabilities, 0.0))
      record(t5, out.q_hot >= -nu && out.q_cold <= nu, w);

    if (n == 3 && engine_strict && fixed_count == 1 &&
        pc != ProbabilityCase::boundary)
      record(t6, pc == ProbabilityCase::case_c, w);

    if (n == 3 && engine_strict &&
        (pc == ProbabilityCase::case_a || pc == ProbabilityCase::case_b)) {
      ++w_nn.count;
      if (w_nn.samples.size() < 3) w_nn.samples.push_back(w);
    }
    if (n == 3 && pc == ProbabilityCase::case_c && shrink_strict == 1 &&
        expand_strict == 1 && out.work_net < -nu) {
      ++w_ns.count;
      if (w_ns.samples.size() < 3) w_ns.samples.push_back(w);
    }
  }
  return sb;
}

inline std::string render_scoreboard(const Scoreboard& sb) {
  std::ostringstream os;
  os << "theorem scoreboard  seed=" << sb.seed << "  trials=" << sb.trials
     << "\n";
  os << "sampler: t in [" << fmt_double(sb.config.t_lo) << ", "
     << fmt_double(sb.config.t_hi) << "], levels in ["
     << fmt_double(sb.config.level_lo) << ", " << fmt_double(sb.config.level_hi)
     << "], n in [" << sb.config.n_min << ", " << sb.config.n_max << "]\n\n";
  os << "  name  applicable  violations  statement\n";
  for (const auto& t : sb.theorems) {
    os << "  ";
    os.width(4);
    os << t.name;
    os.width(12);
    os << t.applicable;
    os.width(12);
    os << t.violations;
    os << "  " << t.statement << "\n";
  }
  os << "\nwitness counts\n";
  for (const auto& wr : sb.witnesses) {
    os << "  ";
    os.width(16);
    os << wr.name;
    os.width(10);
    os << wr.count;
    os << "  " << wr.statement << "\n";
    if (!wr.samples.empty())
      os << "                    sample: " << render_cycle_command(wr.samples.front())
         << "\n";
  }
  bool clean = true;
  for (const auto& t : sb.theorems) {
    for (const auto& c : t.counterexamples) {
      clean = false;
      os << "\ncounterexample " << t.name << " (trial " << c.trial
         << "): " << render_cycle_command(c);
    }
  }
  os << "\nresult: " << (clean ? "PASS" : "FAIL") << "\n";
  return os.str();
}

namespace detail {

inline nlohmann::ordered_json cycle_json(const WitnessCycle& w) {
  nlohmann::ordered_json j;
  j["hot"] = w.hot;
  j["cold"] = w.cold;
  j["t_hot"] = w.t_hot;
  j["t_cold"] = w.t_cold;
  j["trial"] = w.trial;
  j["command"] = render_cycle_command(w);
  return j;
}

}  // namespace detail

inline std::string scoreboard_json(const Scoreboard& sb) {
  nlohmann::ordered_json j;
  j["seed"] = sb.seed;
  j["trials"] = sb.trials;
  j["config"] = {{"t_lo", sb.config.t_lo},
                 {"t_hi", sb.config.t_hi},
                 {"level_lo", sb.config.level_lo},
                 {"level_hi", sb.config.level_hi},
                 {"n_min", sb.config.n_min},
                 {"n_max", sb.config.n_max}};
  j["theorems"] = nlohmann::ordered_json::array();
  for (const auto& t : sb.theorems) {
    nlohmann::ordered_json tj;
    tj["name"] = t.name;
    tj["statement"] = t.statement;
    tj["trials"] = sb.trials;
    tj["applicable"] = t.applicable;
    tj["violations"] = t.violations;
    tj["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& c : t.counterexamples)
      tj["counterexamples"].push_back(detail::cycle_json(c));
    j["theorems"].push_back(tj);
  }
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& wr : sb.witnesses) {
    nlohmann::ordered_json wj;
    wj["name"] = wr.name;
    wj["statement"] = wr.statement;
    wj["count"] = wr.count;
    wj["samples"] = nlohmann::ordered_json::array();
    for (const auto& s : wr.samples) wj["samples"].push_back(detail::cycle_json(s));
    j["witnesses"].push_back(wj);
  }
  return j.dump(2) + "\n";
}

}  // namespace qotto
