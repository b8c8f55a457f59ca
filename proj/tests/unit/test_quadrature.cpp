#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "oamspec/errors.hpp"
#include "oamspec/quadrature.hpp"

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST(GaussLegendre, WeightsSumToTwo) {
  for (int n : {1, 2, 5, 32, 64}) {
    const auto gl = oam::gauss_legendre(n);
    double s = 0.0;
    for (double w : gl.weights) s += w;
    EXPECT_NEAR(s, 2.0, 1e-14) << "n=" << n;
  }
}

TEST(GaussLegendre, ExactForPolynomials) {
  // n nodes integrate x^k exactly for k <= 2n - 1
  for (int n : {3, 8, 20}) {
    const auto gl = oam::gauss_legendre(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j < gl.nodes.size(); ++j) s += gl.weights[j] * std::pow(gl.nodes[j], k);
      const double want = k % 2 == 1 ? 0.0 : 2.0 / (k + 1.0);
      EXPECT_NEAR(s, want, 1e-14) << "n=" << n << " k=" << k;
    }
  }
}

TEST(GaussLegendre, NodesSymmetricAndSorted) {
  const auto gl = oam::gauss_legendre(17);
  for (std::size_t j = 0; j < gl.nodes.size(); ++j) {
    EXPECT_NEAR(gl.nodes[j], -gl.nodes[gl.nodes.size() - 1 - j], 1e-15);
    if (j > 0) EXPECT_LT(gl.nodes[j - 1], gl.nodes[j]);
  }
}

TEST(RadialIntegral, GaussianFirstMoment) {
  oam::QuadratureConfig q;
  q.r_max = 10.0;
  const cd v = oam::integrate_radial([](double r) { return cd(r * std::exp(-3.0 * r * r)); }, q);
  EXPECT_NEAR(v.real(), 1.0 / 6.0, 1e-14);
  EXPECT_EQ(v.imag(), 0.0);
}

TEST(RadialIntegral, GaussianThirdMoment) {
  const oam::QuadratureConfig q;
  const cd v = oam::integrate_radial([](double r) { return cd(r * r * r * std::exp(-3.0 * r * r)); }, q);
  EXPECT_NEAR(v.real(), 1.0 / 18.0, 1e-14);
}

TEST(RadialIntegral, ZeroIntegrand) {
  const cd v = oam::integrate_radial([](double) { return cd(0.0); }, oam::QuadratureConfig{});
  EXPECT_EQ(v, cd(0.0));
}

TEST(RadialIntegral, UnresolvedIntegrandFailsDoubling) {
  oam::QuadratureConfig q;
  q.panels = 1;
  q.radial_nodes = 4;
  EXPECT_THROW(oam::integrate_radial([](double r) { return cd(r * std::cos(40.0 * r)); }, q),
               oam::ConvergenceError);
}

TEST(RadialIntegral, DoublingSelfConsistency) {
  // base and refined rules agree to rel_tol for smooth integrands
  const oam::QuadratureConfig q;
  auto f = [](double r) { return cd(r * r * std::exp(-r * r) * std::cos(r)); };
  const auto coarse = oam::apply_rule(oam::make_radial_rule(q), f);
  const auto fine = oam::apply_rule(oam::make_radial_rule(q.refined()), f);
  EXPECT_LE(std::abs(coarse.value - fine.value), q.rel_tol * fine.magnitude);
}

TEST(PolarIntegral, AzimuthalOrthogonality) {
  const oam::QuadratureConfig q;
  const cd v = oam::integrate_polar_2d(
      [](double r, double phi) { return r * std::exp(-r * r) * std::polar(1.0, phi); }, q);
  EXPECT_LE(std::abs(v), 1e-12);
}

TEST(PolarIntegral, GaussianDisc) {
  const oam::QuadratureConfig q;
  const cd v = oam::integrate_polar_2d([](double r, double) { return cd(r * std::exp(-r * r)); }, q);
  EXPECT_NEAR(v.real(), kPi, kPi * q.rel_tol);
}

TEST(PolarIntegral, ZeroIntegrand) {
  const cd v = oam::integrate_polar_2d([](double, double) { return cd(0.0); }, oam::QuadratureConfig{});
  EXPECT_EQ(v, cd(0.0));
}

TEST(PolarIntegral, HarmonicsReduceToRadial) {
  oam::QuadratureConfig q;
  q.azimuthal_nodes = 64;
  auto g = [](double r) { return r * r * r * std::exp(-2.0 * r * r); };
  const cd radial = oam::integrate_radial([&](double r) { return cd(g(r)); }, q);
  for (int dl = -5; dl <= 5; ++dl) {
    const cd v = oam::integrate_polar_2d(
        [&](double r, double phi) { return g(r) * std::polar(1.0, dl * phi); }, q);
    if (dl == 0) {
      EXPECT_NEAR(v.real(), 2.0 * kPi * radial.real(), 2.0 * kPi * radial.real() * q.rel_tol);
    } else {
      EXPECT_LE(std::abs(v), 1e-10) << "dl=" << dl;
    }
  }
}

TEST(QuadratureConfig, Validation) {
  oam::QuadratureConfig q;
  EXPECT_NO_THROW(q.validate());
  q.rel_tol = 1e-13;
  EXPECT_THROW(q.validate(), oam::ConfigError);
  q = {};
  q.r_max = -1.0;
  EXPECT_THROW(q.validate(), oam::ConfigError);
  q = {};
  q.panels = 0;
  EXPECT_THROW(q.validate(), oam::ConfigError);
  q = {};
  q.radial_nodes = 0;
  EXPECT_THROW(q.validate(), oam::ConfigError);
  q = {};
  q.azimuthal_nodes = 0;
  EXPECT_THROW(q.validate(), oam::ConfigError);
}

TEST(QuadratureConfig, RefinedDoublesNodes) {
  const oam::QuadratureConfig q;
  const auto f = q.refined();
  EXPECT_EQ(f.radial_nodes, 2 * q.radial_nodes);
  EXPECT_EQ(f.azimuthal_nodes, 2 * q.azimuthal_nodes);
  EXPECT_EQ(f.r_max, q.r_max);
  EXPECT_EQ(f.panels, q.panels);
}

}  // namespace
