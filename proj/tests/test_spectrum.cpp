#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qotto/spectrum.hpp"
#include "qotto/verify.hpp"

using qotto::EnergySpectrum;
using qotto::Family;
using qotto::GapVector;

namespace {

std::string thrown_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("spectrum construction validates its levels") {
  CHECK_NOTHROW(EnergySpectrum({0.0, 1.0}));
  CHECK_NOTHROW(EnergySpectrum({-5.0, -2.0, 5.0}));

  CHECK_THROWS_AS(EnergySpectrum({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(EnergySpectrum(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(EnergySpectrum({0.0, std::nan("")}), std::invalid_argument);
  CHECK_THROWS_AS(EnergySpectrum({0.0, INFINITY}), std::invalid_argument);
  CHECK_THROWS_AS(EnergySpectrum({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(EnergySpectrum({3.0, 2.0, 1.0}), std::invalid_argument);

  const std::string msg =
      thrown_message([] { EnergySpectrum({0.0, 2.0, 1.0}); });
  CHECK(msg.find("levels[2]") != std::string::npos);
  CHECK(msg.find("levels[1]") != std::string::npos);
}

TEST_CASE("near-degenerate gaps are rejected relative to the level scale") {
  // gap of 1e-3 against levels of magnitude 1e12 sits below 1e-12 * max|e|
  CHECK_THROWS_AS(EnergySpectrum({1e12, 1e12 + 1e-3}), std::invalid_argument);
  CHECK_NOTHROW(EnergySpectrum({1e12, 1e12 + 10.0}));
  CHECK_NOTHROW(EnergySpectrum({0.0, 1e-3}));
}

TEST_CASE("gaps_of returns adjacent differences and their total") {
  const GapVector g = qotto::gaps_of(EnergySpectrum({-5.0, -2.0, 5.0}));
  REQUIRE(g.gaps.size() == 2);
  CHECK(g.gaps[0] == 3.0);
  CHECK(g.gaps[1] == 7.0);
  CHECK(g.total == 10.0);

  const GapVector gc = qotto::gaps_of(EnergySpectrum({-3.0, -2.0, 3.0}));
  CHECK(gc.gaps[0] == 1.0);
  CHECK(gc.gaps[1] == 5.0);
  CHECK(gc.total == 6.0);

  const GapVector g2 = qotto::gaps_of(EnergySpectrum({0.0, 1.0}));
  REQUIRE(g2.gaps.size() == 1);
  CHECK(g2.gaps[0] == 1.0);
  CHECK(g2.total == 1.0);
}

TEST_CASE("gaps are shift invariant") {
  const GapVector base = qotto::gaps_of(EnergySpectrum({-5.0, -2.0, 5.0}));
  const GapVector shifted = qotto::gaps_of(EnergySpectrum({-1.0, 2.0, 9.0}));
  CHECK(base.gaps[0] == shifted.gaps[0]);
  CHECK(base.gaps[1] == shifted.gaps[1]);

  qotto::detail::SplitMix64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> lv(4);
    for (double& x : lv) x = rng.uniform(-10.0, 10.0);
    std::sort(lv.begin(), lv.end());
    if (lv[1] - lv[0] < 1e-3 || lv[2] - lv[1] < 1e-3 || lv[3] - lv[2] < 1e-3)
      continue;
    const double shift = rng.uniform(-5.0, 5.0);
    std::vector<double> lvs = lv;
    for (double& x : lvs) x += shift;
    const GapVector a = qotto::gaps_of(EnergySpectrum(lv));
    const GapVector b = qotto::gaps_of(EnergySpectrum(lvs));
    for (std::size_t j = 0; j < a.gaps.size(); ++j)
      CHECK(qotto::rel_close(a.gaps[j], b.gaps[j], 1e-12));
  }
}

TEST_CASE("levels reconstruct from the first level plus gap prefix sums") {
  qotto::detail::SplitMix64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 7);
    std::vector<double> lv(static_cast<std::size_t>(n));
    for (double& x : lv) x = rng.uniform(-10.0, 10.0);
    std::sort(lv.begin(), lv.end());
    bool ok = true;
    for (std::size_t k = 1; k < lv.size(); ++k)
      if (lv[k] - lv[k - 1] < 1e-3) ok = false;
    if (!ok) continue;
    const EnergySpectrum s(lv);
    const GapVector g = qotto::gaps_of(s);
    double acc = s.levels[0];
    for (std::size_t k = 1; k < s.levels.size(); ++k) {
      acc += g.gaps[k - 1];
      CHECK(qotto::rel_close(acc, s.levels[k], 1e-12));
    }
  }
}

TEST_CASE("family constructors produce the documented shapes") {
  const EnergySpectrum a = qotto::build_family(Family::fig_a, 5.0, 2.0);
  CHECK(a.levels == std::vector<double>{-5.0, -2.0, 5.0});

  const EnergySpectrum a2 = qotto::build_family(Family::fig_a, 3.0, 2.0);
  CHECK(a2.levels == std::vector<double>{-3.0, -2.0, 3.0});

  const EnergySpectrum b = qotto::build_family(Family::fig_b, 5.0, 6.0);
  CHECK(b.levels == std::vector<double>{-5.0, 5.0, 6.0});

  const EnergySpectrum c = qotto::build_family(Family::fig_c, 1.0, 4.0);
  CHECK(c.levels == std::vector<double>{-1.0, 1.0, 4.0});
}

TEST_CASE("family constructors reject parameter-order violations by name") {
  const std::string m1 = thrown_message(
      [] { qotto::build_family(Family::fig_a, 2.0, 5.0); });
  CHECK(m1.find("B > J") != std::string::npos);

  const std::string m2 = thrown_message(
      [] { qotto::build_family(Family::fig_a, 1.0, -2.0); });
  CHECK(m2.find("J > -B") != std::string::npos);

  const std::string m3 = thrown_message(
      [] { qotto::build_family(Family::fig_b, 3.0, 2.0); });
  CHECK(m3.find("J > B") != std::string::npos);

  const std::string m4 = thrown_message(
      [] { qotto::build_family(Family::fig_c, -1.0, 2.0); });
  CHECK(m4.find("B > 0") != std::string::npos);

  CHECK_THROWS_AS(qotto::build_family(Family::fig_a, std::nan(""), 1.0),
                  std::invalid_argument);
}

TEST_CASE("family names parse case-insensitively") {
  CHECK(qotto::parse_family("figa") == Family::fig_a);
  CHECK(qotto::parse_family("FIGB") == Family::fig_b);
  CHECK(qotto::parse_family("FigC") == Family::fig_c);
  const std::string m = thrown_message([] { qotto::parse_family("figz"); });
  CHECK(m.find("figz") != std::string::npos);
}

TEST_CASE("spectrum text parsing accepts lists and family syntax") {
  CHECK(qotto::parse_spectrum("-5,-2,5").levels ==
        std::vector<double>{-5.0, -2.0, 5.0});
  CHECK(qotto::parse_spectrum(" -5 , -2 , 5 ").levels ==
        std::vector<double>{-5.0, -2.0, 5.0});
  CHECK(qotto::parse_spectrum("figa:5,2").levels ==
        std::vector<double>{-5.0, -2.0, 5.0});
  CHECK(qotto::parse_spectrum("figc:1,4").levels ==
        std::vector<double>{-1.0, 1.0, 4.0});
  CHECK(qotto::parse_spectrum("0.25,1e2").levels ==
        std::vector<double>{0.25, 100.0});
}

TEST_CASE("spectrum text parsing rejects malformed input by naming it") {
  const std::string m1 = thrown_message([] { qotto::parse_spectrum("0,1,x"); });
  CHECK(m1.find("'x'") != std::string::npos);

  const std::string m2 = thrown_message([] { qotto::parse_spectrum("0,,1"); });
  CHECK(m2.find("''") != std::string::npos);

  CHECK_THROWS_AS(qotto::parse_spectrum(""), std::invalid_argument);
  CHECK_THROWS_AS(qotto::parse_spectrum("3,2,1"), std::invalid_argument);
  CHECK_THROWS_AS(qotto::parse_spectrum("figa:5"), std::invalid_argument);
  CHECK_THROWS_AS(qotto::parse_spectrum("figz:5,2"), std::invalid_argument);
  CHECK_THROWS_AS(qotto::parse_spectrum("5"), std::invalid_argument);
}
