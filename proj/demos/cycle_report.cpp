// Minimal library walkthrough: build a 3-level cycle, print its energetics
// and regime classification, then show how the efficiency bounds tighten.

#include <iostream>

#include "qotto/analysis.hpp"
#include "qotto/numeric.hpp"
#include "qotto/spectrum.hpp"
#include "qotto/thermo.hpp"

int main() {
  using namespace qotto;

  const OttoCycle cycle(EnergySpectrum({-5.0, -2.0, 5.0}),
                        EnergySpectrum({-3.0, -2.0, 3.0}), 4.0, 1.0);
  const RegimeReport rep = regime_report(cycle);

  std::cout << "q_hot    = " << fmt_double(rep.outcome.q_hot) << "\n"
            << "q_cold   = " << fmt_double(rep.outcome.q_cold) << "\n"
            << "work_net = " << fmt_double(rep.outcome.work_net) << "\n";
  if (rep.outcome.efficiency)
    std::cout << "eta      = " << fmt_double(*rep.outcome.efficiency) << "\n";
  std::cout << "mode = " << token(rep.mode) << ", case = " << token(rep.prob_case)
            << ", cond = " << token(rep.gap_condition.summary)
            << ", maj = " << token(rep.majorization) << "\n";

  std::cout << "bounds: " << rep.bounds.label
            << "  (xi1 = " << fmt_double(rep.bounds.xi1)
            << ", xi2 = " << fmt_double(rep.bounds.xi2) << ")\n";
  for (const auto& c : rep.bounds.checks)
    std::cout << "  [" << token(c.status) << "] " << c.name
              << "  slack = " << fmt_double(c.slack) << "\n";
  return 0;
}
