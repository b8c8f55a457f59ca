#include <cmath>
#include <complex>
#include <cstdlib>

#include <gtest/gtest.h>

#include "oamspec/errors.hpp"
#include "oamspec/overlap.hpp"

namespace {

using cd = std::complex<double>;
using oam::ModeSpec;

constexpr double kP = 0.5319230405352436;  // (1/3) sqrt(8/pi)

cd lg_coefficient(int lp, int ls, int li, const oam::QuadratureConfig& q = {},
                  oam::CoefficientMethod m = oam::CoefficientMethod::RadialQuadrature) {
  return oam::coefficient(ModeSpec::lg(lp), ModeSpec::lg(ls), ModeSpec::lg(li), q,
                          oam::ModeNormalization::Raw, m)
      .value;
}

TEST(ClosedForm, Prefactor) {
  EXPECT_NEAR(oam::closed_form_prefactor(), kP, 1e-15);
  EXPECT_NEAR(oam::closed_form_coefficient(0, 0, 0), 0.5319230405, 1e-10);
}

TEST(ClosedForm, FirstOrderTriples) {
  EXPECT_NEAR(oam::closed_form_coefficient(0, 1, -1), 0.3546153603, 1e-10);
  EXPECT_NEAR(oam::closed_form_coefficient(1, 1, 0), 0.3546153603, 1e-10);
  EXPECT_DOUBLE_EQ(oam::closed_form_coefficient(1, 1, 0), oam::closed_form_coefficient(0, 1, -1));
}

TEST(ClosedForm, NonConservingIsZero) {
  EXPECT_EQ(oam::closed_form_coefficient(1, 1, 1), 0.0);
  EXPECT_EQ(oam::closed_form_coefficient(3, 0, 0), 0.0);
}

TEST(ClosedForm, HandWorkedHigherOrder) {
  // (2, 3, -1): L = 3, P (2/3)^3 3! / sqrt(2! 3! 1!)
  const double want = kP * std::pow(2.0 / 3.0, 3) * 6.0 / std::sqrt(12.0);
  EXPECT_NEAR(oam::closed_form_coefficient(2, 3, -1), want, 1e-15);
}

TEST(Coefficient, NonConservingIsExactlyZero) {
  EXPECT_EQ(lg_coefficient(1, 1, 1), cd(0.0));
  const auto c = oam::coefficient(ModeSpec::pov(2, 0.25, 0.5), ModeSpec::pov(1, 0.25, 0.5),
                                  ModeSpec::pov(2, 0.25, 0.5), oam::QuadratureConfig{});
  EXPECT_EQ(c.value, cd(0.0));
}

TEST(Coefficient, QuadratureMatchesClosedForm) {
  const oam::QuadratureConfig q;
  for (int lp = -6; lp <= 6; ++lp) {
    for (int ls = -6; ls <= 6; ++ls) {
      const int li = lp - ls;
      if (std::abs(li) > 6) continue;
      const double want = oam::closed_form_coefficient(lp, ls, li);
      const cd got = lg_coefficient(lp, ls, li, q);
      EXPECT_LE(std::abs(got - want), 1e-9 * want) << lp << "," << ls << "," << li;
    }
  }
}

TEST(Coefficient, SpecTripleTwoOneOne) {
  const cd got = lg_coefficient(2, 1, 1);
  const double want = oam::closed_form_coefficient(2, 1, 1);
  EXPECT_LE(std::abs(got - want), 1e-9 * want);
}

TEST(Coefficient, Full2DMatchesRadial) {
  oam::QuadratureConfig q;
  q.azimuthal_nodes = 64;
  for (auto [lp, ls] : {std::pair{0, 0}, std::pair{2, 1}, std::pair{3, -1}}) {
    const cd a = lg_coefficient(lp, ls, lp - ls, q, oam::CoefficientMethod::RadialQuadrature);
    const cd b = lg_coefficient(lp, ls, lp - ls, q, oam::CoefficientMethod::Full2D);
    EXPECT_LE(std::abs(a - b), 1e-9 * std::abs(a));
  }
  const auto pump = ModeSpec::pov(2, 0.25, 0.5);
  const auto sig = ModeSpec::pov(1, 0.25, 0.5);
  const auto a = oam::coefficient(pump, sig, sig, q, oam::ModeNormalization::Raw,
                                  oam::CoefficientMethod::RadialQuadrature);
  const auto b = oam::coefficient(pump, sig, sig, q, oam::ModeNormalization::Raw,
                                  oam::CoefficientMethod::Full2D);
  EXPECT_LE(std::abs(a.value - b.value), 1e-9 * std::abs(a.value));
}

TEST(Coefficient, ClosedFormMethodDispatch) {
  const auto c = oam::coefficient(ModeSpec::lg(2), ModeSpec::lg(3), ModeSpec::lg(-1),
                                  oam::QuadratureConfig{}, oam::ModeNormalization::Raw,
                                  oam::CoefficientMethod::ClosedForm);
  EXPECT_DOUBLE_EQ(c.value.real(), oam::closed_form_coefficient(2, 3, -1));
  EXPECT_THROW(oam::coefficient(ModeSpec::pov(1, 1.0, 0.25), ModeSpec::lg(1), ModeSpec::lg(0),
                                oam::QuadratureConfig{}, oam::ModeNormalization::Raw,
                                oam::CoefficientMethod::ClosedForm),
               oam::ConfigError);
}

TEST(Coefficient, ExchangeSymmetryIsExact) {
  const oam::QuadratureConfig q;
  for (int lp = 0; lp <= 4; ++lp) {
    for (int ls = -5; ls <= 5; ++ls) {
      const int li = lp - ls;
      EXPECT_EQ(lg_coefficient(lp, ls, li, q), lg_coefficient(lp, li, ls, q));
      const auto pov = [](int l) { return ModeSpec::pov(l, 0.25, 0.5); };
      EXPECT_EQ(oam::coefficient(pov(lp), pov(ls), pov(li), q).value,
                oam::coefficient(pov(lp), pov(li), pov(ls), q).value);
      EXPECT_EQ(oam::coefficient(pov(lp), ModeSpec::lg(ls), ModeSpec::lg(li), q).value,
                oam::coefficient(pov(lp), ModeSpec::lg(li), ModeSpec::lg(ls), q).value);
    }
  }
}

TEST(Coefficient, SignFlipSymmetry) {
  const oam::QuadratureConfig q;
  for (int lp = 0; lp <= 4; ++lp) {
    for (int ls = -5; ls <= 5; ++ls) {
      const int li = lp - ls;
      EXPECT_EQ(lg_coefficient(lp, ls, li, q), lg_coefficient(-lp, -ls, -li, q));
      // the POV pump phase i^{l_p - 1} changes under l_p -> -l_p; magnitudes agree
      const auto pov = [](int l) { return ModeSpec::pov(l, 0.25, 0.5); };
      const cd a = oam::coefficient(pov(lp), pov(ls), pov(li), q).value;
      const cd b = oam::coefficient(pov(-lp), pov(-ls), pov(-li), q).value;
      EXPECT_EQ(std::abs(a), std::abs(b));
    }
  }
}

TEST(Coefficient, TruncatedWindowIsRejected) {
  oam::QuadratureConfig q;
  q.r_max = 1.5;
  EXPECT_THROW(lg_coefficient(4, 2, 2, q), oam::ConvergenceError);
}

TEST(Coefficient, UnitNormPovScalesAmplitude) {
  const oam::QuadratureConfig q;
  const auto pump = ModeSpec::pov(1, 0.25, 0.5);
  const auto raw = oam::coefficient(pump, ModeSpec::lg(1), ModeSpec::lg(0), q, oam::ModeNormalization::Raw);
  const auto unit = oam::coefficient(pump, ModeSpec::lg(1), ModeSpec::lg(0), q, oam::ModeNormalization::UnitL2);
  const double norm = oam::l2_norm(oam::Mode(pump), q);
  EXPECT_NEAR(std::abs(unit.value) * norm, std::abs(raw.value), 1e-12 * std::abs(raw.value));
}

TEST(ProfileTable, AgreesBitwiseWithDirectPath) {
  const oam::QuadratureConfig q;
  oam::ProfileTable pump(ModeSpec::pov(0, 0.25, 0.5), oam::ModeNormalization::Raw, q);
  oam::ProfileTable lg(ModeSpec::lg(0), oam::ModeNormalization::Raw, q);
  for (int ls = -4; ls <= 6; ++ls) {
    const int li = 2 - ls;
    const cd table = oam::coefficient(pump, 2, lg, ls, lg, li).value;
    const cd direct = oam::coefficient(ModeSpec::pov(2, 0.25, 0.5), ModeSpec::lg(ls), ModeSpec::lg(li), q).value;
    EXPECT_EQ(table, direct) << "ls=" << ls;
  }
}

TEST(ProfileCache, ReturnsSameTable) {
  oam::ProfileCache cache{oam::QuadratureConfig{}};
  auto& a = cache.table(ModeSpec::lg(3), oam::ModeNormalization::Raw);
  auto& b = cache.table(ModeSpec::lg(-1), oam::ModeNormalization::Raw);
  auto& c = cache.table(ModeSpec::lg(0, 0, 2.0), oam::ModeNormalization::Raw);
  EXPECT_EQ(&a, &b);
  EXPECT_NE(&a, &c);
}

}  // namespace
