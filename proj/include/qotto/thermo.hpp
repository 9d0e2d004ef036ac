#pragma once
// Gibbs states and quasi-static Otto cycle energetics: heat exchanged at each
// reservoir, net work, efficiency, and the equivalent gap/tail-sum forms.
// Units are dimensionless (hbar = k_B = 1).

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qotto/numeric.hpp"
#include "qotto/spectrum.hpp"

namespace qotto {

// Occupation probabilities of a Gibbs state; strictly decreasing in k while
// no Boltzmann weight underflows.
struct ThermalState {
  std::vector<double> probabilities;
  double temperature;
  EnergySpectrum spectrum;
};

// Weights computed as exp((e_min - e_k)/T) so the largest weight is exactly 1
// and nothing overflows for |e_k|/T up to 700 and beyond.
inline ThermalState gibbs_state(const EnergySpectrum& s, double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::invalid_argument("temperature must be positive and finite, got " +
                                fmt_double(t));
  const double e0 = s.levels.front();
  std::vector<double> p(s.size());
  double z = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    p[k] = std::exp((e0 - s.levels[k]) / t);
    z += p[k];
  }
  for (double& v : p) v /= z;
  return ThermalState{std::move(p), t, s};
}

struct OttoCycle {
  EnergySpectrum hot;
  EnergySpectrum cold;
  double t_hot;
  double t_cold;

  OttoCycle(EnergySpectrum h, EnergySpectrum c, double th, double tc)
      : hot(std::move(h)), cold(std::move(c)), t_hot(th), t_cold(tc) {
    if (hot.size() != cold.size())
      throw std::invalid_argument(
          "hot and cold spectra must have the same dimension, got " +
          std::to_string(hot.size()) + " and " + std::to_string(cold.size()));
    if (!(t_cold > 0.0) || !std::isfinite(t_cold))
      throw std::invalid_argument("t_cold must be positive and finite, got " +
                                  fmt_double(t_cold));
    if (!(t_hot > t_cold) || !std::isfinite(t_hot))
      throw std::invalid_argument("t_hot must exceed t_cold, got t_hot = " +
                                  fmt_double(t_hot) + ", t_cold = " +
                                  fmt_double(t_cold));
  }
};

// Sign convention: q_hot and q_cold are energies absorbed by the working
// medium at each reservoir; work_net = q_hot + q_cold is the extracted work.
struct CycleOutcome {
  double q_hot = 0.0;
  double q_cold = 0.0;
  double work_net = 0.0;
  std::optional<double> efficiency;
};

inline std::optional<double> efficiency(const CycleOutcome& o) {
  if (o.q_hot > 0.0 && o.work_net > 0.0) return o.work_net / o.q_hot;
  return std::nullopt;
}

// Level forms: q_hot = sum_k e_k (P_k - P'_k), q_cold = sum_k e'_k (P'_k - P_k),
// work_net = sum_k (e_k - e'_k)(P_k - P'_k). work_net is summed independently
// rather than taken as q_hot + q_cold, so the first law stays a checkable
// identity.
inline CycleOutcome cycle_outcome(const OttoCycle& c) {
  const ThermalState hot = gibbs_state(c.hot, c.t_hot);
  const ThermalState cold = gibbs_state(c.cold, c.t_cold);
  CycleOutcome o;
  for (std::size_t k = 0; k < c.hot.size(); ++k) {
    const double dp = hot.probabilities[k] - cold.probabilities[k];
    o.q_hot += c.hot.levels[k] * dp;
    o.q_cold += -c.cold.levels[k] * dp;
    o.work_net += (c.hot.levels[k] - c.cold.levels[k]) * dp;
  }
  o.efficiency = efficiency(o);
  return o;
}

struct GapFormHeats {
  double q_hot = 0.0;
  double q_cold = 0.0;
  double work_net = 0.0;
};

// Gap/tail-sum forms: with tail_j = sum_{i>j} (P_i - P'_i),
// q_hot = sum_j w_j tail_j, q_cold = -sum_j w'_j tail_j,
// work_net = sum_j (w_j - w'_j) tail_j. Must match the level forms.
inline GapFormHeats heats_gap_form(const OttoCycle& c) {
  const ThermalState hot = gibbs_state(c.hot, c.t_hot);
  const ThermalState cold = gibbs_state(c.cold, c.t_cold);
  const GapVector gh = gaps_of(c.hot);
  const GapVector gc = gaps_of(c.cold);
  const std::size_t n = c.hot.size();
  GapFormHeats g;
  double tail = 0.0;
  for (std::size_t j = n - 1; j-- > 0;) {
    tail += hot.probabilities[j + 1] - cold.probabilities[j + 1];
    g.q_hot += gh.gaps[j] * tail;
    g.q_cold += -gc.gaps[j] * tail;
    g.work_net += (gh.gaps[j] - gc.gaps[j]) * tail;
  }
  return g;
}

}  // namespace qotto
