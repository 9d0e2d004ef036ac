// Command-line front end: cycle evaluation, regime classification, sweeps,
// figure presets, and the randomized theorem verifier.
// Exit codes: 0 success, 1 invalid input, 2 theorem counterexample found.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qotto/analysis.hpp"
#include "qotto/majorization.hpp"
#include "qotto/numeric.hpp"
#include "qotto/spectrum.hpp"
#include "qotto/sweep.hpp"
#include "qotto/thermo.hpp"
#include "qotto/verify.hpp"

namespace {

qotto::EnergySpectrum parse_spectrum_arg(const std::string& text,
                                         const char* flag) {
  try {
    return qotto::parse_spectrum(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(flag) + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
  f << text;
  if (!f) throw std::invalid_argument("failed writing output file '" + path + "'");
}

std::string render_check(const qotto::InequalityCheck& c) {
  std::string s = "  [" + std::string(qotto::token(c.status)) + "] " + c.name;
  if (c.status != qotto::CheckStatus::skipped)
    s += "  slack = " + qotto::fmt_double(c.slack);
  if (!c.note.empty()) s += "  (" + c.note + ")";
  return s + "\n";
}

std::string render_outcome_lines(const qotto::RegimeReport& rep) {
  std::string s;
  s += "q1 = " + qotto::fmt_double(rep.outcome.q_hot) + "\n";
  s += "q2 = " + qotto::fmt_double(rep.outcome.q_cold) + "\n";
  s += "w = " + qotto::fmt_double(rep.outcome.work_net) + "\n";
  if (rep.outcome.efficiency)
    s += "eta = " + qotto::fmt_double(*rep.outcome.efficiency) + "\n";
  else
    s += "eta = (absent: not an engine)\n";
  s += "mode = " + std::string(qotto::token(rep.mode)) + "\n";
  s += "case = " + std::string(qotto::token(rep.prob_case)) + "\n";
  s += "cond = " + std::string(qotto::token(rep.gap_condition.summary)) + "\n";
  s += "maj = " + std::string(qotto::token(rep.majorization)) + "\n";
  for (std::size_t j = 0; j < rep.xi.size(); ++j)
    s += "xi" + std::to_string(j + 1) + " = " + qotto::fmt_double(rep.xi[j]) + "\n";
  return s;
}

std::string render_csv_row(const qotto::EnergySpectrum& hot,
                           const qotto::EnergySpectrum& cold, double t1,
                           double t2, double tol) {
  if (hot.size() != 3)
    throw std::invalid_argument("csv format needs a 3-level cycle, got " +
                                std::to_string(hot.size()) + " levels");
  const qotto::SweepRow row = qotto::sweep_row(hot, cold, t1, t2, tol);
  return qotto::csv_header() + "\n" + qotto::csv_line(row) + "\n";
}

int run_cycle(const std::string& hot_str, const std::string& cold_str,
              double t1, double t2, double tol, const std::string& format,
              const std::string& out) {
  const auto hot = parse_spectrum_arg(hot_str, "--hot");
  const auto cold = parse_spectrum_arg(cold_str, "--cold");
  const qotto::OttoCycle cycle(hot, cold, t1, t2);
  if (format == "csv") {
    write_output(out, render_csv_row(hot, cold, t1, t2, tol));
    return 0;
  }
  const qotto::RegimeReport rep = qotto::regime_report(cycle, tol);
  write_output(out, render_outcome_lines(rep));
  return 0;
}

int run_classify(const std::string& hot_str, const std::string& cold_str,
                 double t1, double t2, double tol, const std::string& format,
                 const std::string& out) {
  const auto hot = parse_spectrum_arg(hot_str, "--hot");
  const auto cold = parse_spectrum_arg(cold_str, "--cold");
  const qotto::OttoCycle cycle(hot, cold, t1, t2);
  if (format == "csv") {
    write_output(out, render_csv_row(hot, cold, t1, t2, tol));
    return 0;
  }
  const qotto::RegimeReport rep = qotto::regime_report(cycle, tol);
  std::string s = render_outcome_lines(rep);
  s += "dp1 = " + qotto::fmt_double(rep.dp1) + "\n";
  s += "dp3 = " + qotto::fmt_double(rep.dp3) + "\n";
  if (!rep.checks.empty()) {
    s += "checks:\n";
    for (const auto& c : rep.checks) s += render_check(c);
  }
  s += "bounds: " + rep.bounds.label + "\n";
  if (rep.bounds.applicable) {
    s += "  xi1 = " + qotto::fmt_double(rep.bounds.xi1) +
         ", xi2 = " + qotto::fmt_double(rep.bounds.xi2);
    if (rep.bounds.eta) s += ", eta = " + qotto::fmt_double(*rep.bounds.eta);
    s += "\n";
    for (const auto& c : rep.bounds.checks) s += render_check(c);
  }
  const auto render_group = [&](const char* title,
                                const std::vector<qotto::InequalityCheck>& cs) {
    s += std::string(title) + ":\n";
    for (const auto& c : cs) s += render_check(c);
  };
  switch (rep.prob_case) {
    case qotto::ProbabilityCase::case_a:
      render_group("case a consequences",
                   qotto::check_case_a_consequences(cycle, tol));
      break;
    case qotto::ProbabilityCase::case_b:
      render_group("case b consequences",
                   qotto::check_case_b_consequences(cycle, tol));
      break;
    case qotto::ProbabilityCase::case_c:
      render_group("case c feasibility",
                   qotto::check_case_c_feasibility(cycle, tol));
      break;
    default:
      break;
  }
  const qotto::FixedTotalGapWork ft = qotto::fixed_total_gap_work(cycle, tol);
  if (ft.applicable) {
    s += "fixed total gap: work = (w2-w2')(P2'-P2) = " +
         qotto::fmt_double(ft.work_product) + " (identity " +
         (ft.identity_ok ? "holds" : "FAILS") + ")\n";
    s += render_check(ft.pairing);
  }
  write_output(out, s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-level quasi-static Otto cycle toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "key=value config file ([subcommand] sections); "
                 "command-line flags override");

  std::string hot_str;
  std::string cold_str;
  double t1 = 0.0;
  double t2 = 0.0;
  double tol = qotto::classify_tol;
  std::string format = "human";
  std::string out_path;

  const auto add_cycle_options = [&](CLI::App* sub) {
    sub->add_option("--hot", hot_str,
                    "hot-side spectrum: ascending comma list or family "
                    "(figa:B,J / figb:B,J / figc:B,J)")
        ->required();
    sub->add_option("--cold", cold_str, "cold-side spectrum, same forms")
        ->required();
    sub->add_option("--t1", t1, "hot reservoir temperature")->required();
    sub->add_option("--t2", t2, "cold reservoir temperature")->required();
    sub->add_option("--tol", tol, "classification tolerance")->capture_default_str();
    sub->add_option("--format", format, "output format")->capture_default_str()
        ->check(CLI::IsMember({"human", "csv"}));
    sub->add_option("--out", out_path, "output file (default stdout)");
  };

  CLI::App* cyc = app.add_subcommand(
      "cycle", "evaluate one Otto cycle: heats, work, efficiency, regime");
  add_cycle_options(cyc);

  CLI::App* cls = app.add_subcommand(
      "classify", "full regime report: checks, chains, efficiency bounds");
  add_cycle_options(cls);

  double lo = 0.2;
  double hi = 3.8;
  int points = 181;
  CLI::App* swp = app.add_subcommand(
      "sweep", "sweep t2 over a uniform grid, emitting CSV rows");
  swp->add_option("--hot", hot_str, "hot-side spectrum")->required();
  swp->add_option("--cold", cold_str, "cold-side spectrum")->required();
  swp->add_option("--t1", t1, "hot reservoir temperature")->required();
  swp->add_option("--lo", lo, "lowest t2")->capture_default_str();
  swp->add_option("--hi", hi, "highest t2")->capture_default_str();
  swp->add_option("--points", points, "grid point count")->capture_default_str();
  swp->add_option("--tol", tol, "classification tolerance")->capture_default_str();
  swp->add_option("--out", out_path, "output file (default stdout)");

  std::string preset_name;
  CLI::App* fig = app.add_subcommand(
      "figure", "emit a preset sweep (fig3, fig4, fig5, fig6) as CSV");
  fig->add_option("preset", preset_name, "preset name")->required();
  fig->add_option("--t1", t1, "override hot temperature");
  fig->add_option("--lo", lo, "override lowest t2");
  fig->add_option("--hi", hi, "override highest t2");
  fig->add_option("--points", points, "override grid point count");
  fig->add_option("--tol", tol, "classification tolerance")->capture_default_str();
  fig->add_option("--out", out_path, "output file (default stdout)");

  std::uint64_t seed = 0;
  long trials = 100000;
  std::string summary_path;
  qotto::SamplerConfig cfg;
  CLI::App* ver = app.add_subcommand(
      "verify", "sample random cycles and assert the regime theorems");
  ver->add_option("--seed", seed, "sampler seed (required for reproducibility)")
      ->required();
  ver->add_option("--trials", trials, "number of sampled cycles")->capture_default_str();
  ver->add_option("--summary", summary_path, "write a JSON summary here");
  ver->add_option("--out", out_path, "scoreboard output file (default stdout)");
  ver->add_option("--t-lo", cfg.t_lo, "lowest temperature")->capture_default_str();
  ver->add_option("--t-hi", cfg.t_hi, "highest temperature")->capture_default_str();
  ver->add_option("--level-lo", cfg.level_lo, "lowest energy level")->capture_default_str();
  ver->add_option("--level-hi", cfg.level_hi, "highest energy level")->capture_default_str();
  ver->add_option("--n-min", cfg.n_min, "smallest level count")->capture_default_str();
  ver->add_option("--n-max", cfg.n_max, "largest level count")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    for (double v : {t1, t2, tol, lo, hi}) {
      if (std::isnan(v) || std::isinf(v))
        throw std::invalid_argument("numeric arguments must be finite");
    }
    if (cyc->parsed())
      return run_cycle(hot_str, cold_str, t1, t2, tol, format, out_path);
    if (cls->parsed())
      return run_classify(hot_str, cold_str, t1, t2, tol, format, out_path);
    if (swp->parsed()) {
      const auto hot = parse_spectrum_arg(hot_str, "--hot");
      const auto cold = parse_spectrum_arg(cold_str, "--cold");
      const qotto::SweepSpec spec{hot, cold, t1, lo, hi, points, tol};
      write_output(out_path, qotto::to_csv(qotto::run_sweep(spec)));
      return 0;
    }
    if (fig->parsed()) {
      qotto::SweepSpec spec = qotto::figure_spec(qotto::parse_preset(preset_name));
      if (fig->count("--t1") > 0) spec.t_hot = t1;
      if (fig->count("--lo") > 0) spec.lo = lo;
      if (fig->count("--hi") > 0) spec.hi = hi;
      if (fig->count("--points") > 0) spec.points = points;
      spec.tol = tol;
      write_output(out_path, qotto::to_csv(qotto::run_sweep(spec)));
      return 0;
    }
    if (ver->parsed()) {
      const qotto::Scoreboard sb = qotto::verify_theorems(cfg, trials, seed);
      write_output(out_path, qotto::render_scoreboard(sb));
      if (!summary_path.empty())
        write_output(summary_path, qotto::scoreboard_json(sb));
      return qotto::scoreboard_clean(sb) ? 0 : 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
