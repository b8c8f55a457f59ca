#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <gtest/gtest.h>

#include "oamspec/errors.hpp"
#include "oamspec/spectrum.hpp"

namespace {

using oam::ScenarioKind;

oam::SpectrumGrid spectrum(ScenarioKind kind, int lp) {
  return oam::build_spectrum(oam::Scenario::make(kind, lp), oam::QuadratureConfig{});
}

std::vector<std::pair<int, int>> global_maxima(const oam::SpectrumGrid& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : oam::find_maxima(g)) {
    if (p.global) out.emplace_back(p.l_s, p.l_i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int secondary_count(const oam::SpectrumGrid& g) {
  int n = 0;
  for (const auto& p : oam::find_maxima(g)) n += p.global ? 0 : 1;
  return n;
}

TEST(Spectrum, ProbabilitiesSumToOne) {
  for (auto kind : oam::kAllScenarioKinds) {
    for (int lp = -2; lp <= 4; ++lp) {
      const auto g = spectrum(kind, lp);
      double s = 0.0;
      for (double p : g.probs) s += p;
      EXPECT_NEAR(s, 1.0, 1e-12);
      EXPECT_TRUE(std::all_of(g.probs.begin(), g.probs.end(), [](double p) { return p >= 0.0; }));
    }
  }
}

TEST(Spectrum, SelectionRuleZeros) {
  for (auto kind : oam::kAllScenarioKinds) {
    const auto g = spectrum(kind, 2);
    for (int ls = -5; ls <= 5; ++ls) {
      for (int li = -5; li <= 5; ++li) {
        if (ls + li != 2) {
          EXPECT_EQ(g.probability(ls, li), 0.0);
        }
      }
    }
    EXPECT_GT(g.probability(1, 1), 0.0);
  }
}

TEST(Spectrum, WindowCoversBothPhotons) {
  const auto g = spectrum(ScenarioKind::LgLgLg, 3);
  for (std::size_t k = 0; k < g.l_s.size(); ++k) {
    EXPECT_LE(std::abs(g.l_s[k]), g.window);
    EXPECT_LE(std::abs(g.l_i(k)), g.window);
    if (k > 0) EXPECT_LT(g.l_s[k - 1], g.l_s[k]);
  }
  EXPECT_EQ(g.probability(g.window + 1, 3 - g.window - 1), 0.0);
  EXPECT_LE(g.edge_ratio, oam::kWindowEdgeRatio);
  EXPECT_LT(g.tail_mass, 1e-6);
}

TEST(Spectrum, ExchangeReflection) {
  for (auto kind : oam::kAllScenarioKinds) {
    const auto g = spectrum(kind, 3);
    for (int ls = -8; ls <= 8; ++ls) EXPECT_EQ(g.probability(ls, 3 - ls), g.probability(3 - ls, ls));
  }
}

TEST(Spectrum, PumpSignFlipMirrorsGrid) {
  for (auto kind : oam::kAllScenarioKinds) {
    const auto a = spectrum(kind, 2);
    const auto b = spectrum(kind, -2);
    for (int ls = -8; ls <= 8; ++ls) {
      EXPECT_NEAR(a.probability(ls, 2 - ls), b.probability(-ls, -2 + ls), 1e-15);
    }
  }
}

TEST(Spectrum, GaussianPumpPeaksAtOrigin) {
  const auto g = spectrum(ScenarioKind::LgLgLg, 0);
  EXPECT_EQ(global_maxima(g), (std::vector<std::pair<int, int>>{{0, 0}}));
}

TEST(Spectrum, FirstOrderPumpPeaksAreEqualPair) {
  const auto g = spectrum(ScenarioKind::LgLgLg, 1);
  EXPECT_EQ(global_maxima(g), (std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}));
  EXPECT_EQ(g.probability(1, 0), g.probability(0, 1));
}

TEST(Spectrum, OddPumpPeaksStraddleHalf) {
  const auto g = spectrum(ScenarioKind::LgLgLg, 3);
  EXPECT_EQ(global_maxima(g), (std::vector<std::pair<int, int>>{{1, 2}, {2, 1}}));
}

TEST(Spectrum, EvenPumpPeaksFollowClosedForm) {
  // the closed-form amplitude is largest where L stays minimal and the
  // factorials balance: (1,1) for l_p = 2, (2,2) for l_p = 4
  EXPECT_EQ(global_maxima(spectrum(ScenarioKind::LgLgLg, 2)), (std::vector<std::pair<int, int>>{{1, 1}}));
  EXPECT_EQ(global_maxima(spectrum(ScenarioKind::LgLgLg, 4)), (std::vector<std::pair<int, int>>{{2, 2}}));
}

TEST(Spectrum, LgSecondaryMaxima) {
  for (int lp : {2, 3, 4}) EXPECT_GE(secondary_count(spectrum(ScenarioKind::LgLgLg, lp)), 1) << lp;
}

TEST(Spectrum, PovPumpHasNoSecondaryMaxima) {
  for (int lp : {2, 3, 4}) EXPECT_EQ(secondary_count(spectrum(ScenarioKind::PovLgLg, lp)), 0) << lp;
}

TEST(Spectrum, PovProjectionPeaksNearDiagonal) {
  for (int lp = 0; lp <= 4; ++lp) {
    for (auto [ls, li] : global_maxima(spectrum(ScenarioKind::PovPovPov, lp))) {
      EXPECT_LE(std::abs(ls - li), 1);
    }
  }
}

TEST(Spectrum, WidthNarrowsWithPovModes) {
  for (int lp = 0; lp <= 4; ++lp) {
    const double a = oam::spectrum_width(spectrum(ScenarioKind::LgLgLg, lp));
    const double b = oam::spectrum_width(spectrum(ScenarioKind::PovLgLg, lp));
    const double c = oam::spectrum_width(spectrum(ScenarioKind::PovPovPov, lp));
    EXPECT_GT(a, b) << lp;
    EXPECT_GT(b, c) << lp;
  }
}

TEST(Spectrum, ExplicitWindowTooSmall) {
  auto sc = oam::Scenario::make(ScenarioKind::LgLgLg, 2);
  sc.l_window = 8;
  try {
    oam::build_spectrum(sc, oam::QuadratureConfig{});
    FAIL() << "expected WindowTooSmallError";
  } catch (const oam::WindowTooSmallError& e) {
    EXPECT_EQ(e.window(), 8);
    EXPECT_GT(e.edge_ratio(), oam::kWindowEdgeRatio);
  }
}

TEST(Spectrum, ExplicitWideWindowMatchesAuto) {
  const auto a = spectrum(ScenarioKind::PovLgLg, 1);
  auto sc = oam::Scenario::make(ScenarioKind::PovLgLg, 1);
  sc.l_window = a.window + 10;
  const auto b = oam::build_spectrum(sc, oam::QuadratureConfig{});
  for (int ls = -5; ls <= 6; ++ls) EXPECT_NEAR(a.probability(ls, 1 - ls), b.probability(ls, 1 - ls), 1e-9);
}

TEST(Spectrum, WindowBelowMinimumIsConfigError) {
  auto sc = oam::Scenario::make(ScenarioKind::LgLgLg, 3);
  sc.l_window = 6;
  EXPECT_THROW(sc.validate(), oam::ConfigError);
  EXPECT_THROW(oam::build_spectrum(sc, oam::QuadratureConfig{}), oam::ConfigError);
}

TEST(Spectrum, CacheAndDirectPathsAgree) {
  oam::ProfileCache cache{oam::QuadratureConfig{}};
  for (auto kind : oam::kAllScenarioKinds) {
    const auto sc = oam::Scenario::make(kind, 2);
    const auto a = oam::build_spectrum(sc, oam::QuadratureConfig{});
    const auto b = oam::build_spectrum(sc, cache);
    EXPECT_EQ(a.probs, b.probs);
  }
}

TEST(ParticipationRatio, Examples) {
  EXPECT_DOUBLE_EQ(oam::participation_ratio({1.0}), 1.0);
  EXPECT_DOUBLE_EQ(oam::participation_ratio({0.5, 0.5}), 2.0);
  EXPECT_DOUBLE_EQ(oam::participation_ratio({0.25, 0.25, 0.25, 0.25}), 4.0);
}

TEST(ScenarioKind, Labels) {
  EXPECT_EQ(oam::to_string(ScenarioKind::LgLgLg), "LG->LG,LG");
  EXPECT_EQ(oam::to_string(ScenarioKind::PovLgLg), "POV->LG,LG");
  EXPECT_EQ(oam::to_string(ScenarioKind::PovPovPov), "POV->POV,POV");
  for (auto k : oam::kAllScenarioKinds) EXPECT_EQ(oam::parse_scenario_kind(oam::to_string(k)), k);
  EXPECT_THROW(oam::parse_scenario_kind("LG->POV"), oam::ConfigError);
}

}  // namespace
