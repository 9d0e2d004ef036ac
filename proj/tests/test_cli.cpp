#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qotto/spectrum.hpp"
#include "qotto/sweep.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QOTTO_CLI_PATH) + " " + args +
                          " > cli_stdout.txt 2> cli_stderr.txt";
  const int status = std::system(cmd.c_str());
  CliResult r;
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  r.out = slurp("cli_stdout.txt");
  r.err = slurp("cli_stderr.txt");
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("cycle prints the regime summary") {
  const auto r = run_cli("cycle --hot -5,-2,5 --cold -3,-2,3 --t1 4 --t2 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "q1 = 0.6162504922074079"));
  CHECK(contains(r.out, "q2 = -0.3414103508961346"));
  CHECK(contains(r.out, "w = 0.2748401413112734"));
  CHECK(contains(r.out, "eta = 0.4459877027064053"));
  CHECK(contains(r.out, "mode = engine"));
  CHECK(contains(r.out, "case = c"));
  CHECK(contains(r.out, "cond = 1"));
  CHECK(contains(r.out, "maj = P<P'"));
  CHECK(contains(r.out, "xi1 = 0.6666666666666666"));
  CHECK(contains(r.out, "xi2 = 0.2857142857142857"));
  CHECK(r.err.empty());
}

TEST_CASE("family shorthand and csv format reproduce the library row") {
  const auto r = run_cli(
      "cycle --hot figa:5,2 --cold figa:3,2 --t1 4 --t2 1 --format csv");
  CHECK(r.exit_code == 0);
  const auto row = qotto::sweep_row(qotto::build_family(qotto::Family::fig_a, 5.0, 2.0),
                                    qotto::build_family(qotto::Family::fig_a, 3.0, 2.0),
                                    4.0, 1.0);
  CHECK(r.out == qotto::csv_header() + "\n" + qotto::csv_line(row) + "\n");
}

TEST_CASE("classify adds shifts, checks, bounds, and the case group") {
  const auto r = run_cli("classify --hot -5,-2,5 --cold -3,-2,3 --t1 4 --t2 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "dp1 = "));
  CHECK(contains(r.out, "dp3 = "));
  CHECK(contains(r.out, "checks:"));
  CHECK(contains(r.out, "bounds: xi2 < eta < xi1"));
  CHECK(contains(r.out, "case c feasibility:"));
  CHECK(contains(r.out, "[pass]"));
  CHECK_FALSE(contains(r.out, "[fail]"));
}

TEST_CASE("invalid inputs exit 1 with a named diagnostic") {
  const auto desc = run_cli("cycle --hot 5,2,0 --cold -3,-2,3 --t1 4 --t2 1");
  CHECK(desc.exit_code == 1);
  CHECK(contains(desc.err, "--hot"));
  CHECK(contains(desc.err, "levels must increase strictly"));

  const auto temps = run_cli("cycle --hot -5,-2,5 --cold -3,-2,3 --t1 1 --t2 4");
  CHECK(temps.exit_code == 1);
  CHECK(contains(temps.err, "t_hot must exceed"));

  const auto preset = run_cli("figure fig9");
  CHECK(preset.exit_code == 1);
  CHECK(contains(preset.err, "fig9"));

  const auto seedless = run_cli("verify --trials 10");
  CHECK(seedless.exit_code == 1);
  CHECK(contains(seedless.err, "--seed"));

  const auto bare = run_cli("");
  CHECK(bare.exit_code == 1);

  const auto format = run_cli(
      "cycle --hot -5,-2,5 --cold -3,-2,3 --t1 4 --t2 1 --format xml");
  CHECK(format.exit_code == 1);

  const auto nonfinite = run_cli("cycle --hot 0,1 --cold 0,0.5 --t1 nan --t2 0.5");
  CHECK(nonfinite.exit_code == 1);
  CHECK(contains(nonfinite.err, "finite"));
}

TEST_CASE("figure presets write CSV files") {
  const auto r = run_cli("figure fig6 --out fig6_out.csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  const std::string text = slurp("fig6_out.csv");
  CHECK(count_lines(text) == 182);  // header + 181 rows
  CHECK(text.rfind(qotto::csv_header() + "\n", 0) == 0);
}

TEST_CASE("sweep subcommand matches the library sweep byte for byte") {
  const auto r = run_cli(
      "sweep --hot figa:5,2 --cold figa:3,2 --t1 4 --lo 1 --hi 2 --points 5");
  CHECK(r.exit_code == 0);
  const qotto::SweepSpec spec{qotto::build_family(qotto::Family::fig_a, 5.0, 2.0),
                              qotto::build_family(qotto::Family::fig_a, 3.0, 2.0),
                              4.0,
                              1.0,
                              2.0,
                              5};
  CHECK(r.out == qotto::to_csv(qotto::run_sweep(spec)));
}

TEST_CASE("repeated verify runs are byte-identical and clean") {
  const auto a = run_cli("verify --seed 7 --trials 3000 --out verify_a.txt");
  const auto b = run_cli("verify --seed 7 --trials 3000 --out verify_b.txt");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  const std::string ta = slurp("verify_a.txt");
  CHECK(ta == slurp("verify_b.txt"));
  CHECK(contains(ta, "result: PASS"));
}

TEST_CASE("verify writes a parseable JSON summary") {
  const auto r = run_cli("verify --seed 11 --trials 2000 --summary summary.json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(slurp("summary.json"));
  CHECK(j["seed"] == 11);
  CHECK(j["trials"] == 2000);
  REQUIRE(j.contains("theorems"));
  REQUIRE(j["theorems"].size() == 8);
  for (const auto& t : j["theorems"]) {
    CHECK(t["violations"] == 0);
    CHECK(t["applicable"] > 0);
  }
  REQUIRE(j.contains("witnesses"));
  CHECK(j["witnesses"].size() == 2);
}

TEST_CASE("config files fill options and command-line flags override") {
  {
    std::ofstream f("cycle_cfg.toml");
    f << "[cycle]\n"
         "hot = \"-5,-2,5\"\n"
         "cold = \"-3,-2,3\"\n"
         "t1 = 4\n"
         "t2 = 2\n";
  }
  const auto pure = run_cli("--config cycle_cfg.toml cycle");
  CHECK(pure.exit_code == 0);
  CHECK(contains(pure.out, "mode = accelerator"));
  CHECK(contains(pure.out, "eta = (absent: not an engine)"));

  const auto over = run_cli("--config cycle_cfg.toml cycle --t2 1");
  CHECK(over.exit_code == 0);
  CHECK(contains(over.out, "w = 0.2748401413112734"));
  CHECK(contains(over.out, "mode = engine"));

  const auto missing = run_cli("--config no_such_file.toml cycle --t2 1");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("help exits 0 and lists the subcommands") {
  const auto r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "cycle"));
  CHECK(contains(r.out, "classify"));
  CHECK(contains(r.out, "sweep"));
  CHECK(contains(r.out, "figure"));
  CHECK(contains(r.out, "verify"));
}

TEST_CASE("figure output is deterministic across runs") {
  const auto a = run_cli("figure fig4");
  const auto b = run_cli("figure fig4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(count_lines(a.out) == 182);
}
