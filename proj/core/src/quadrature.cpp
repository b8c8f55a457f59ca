#include "oamspec/quadrature.hpp"

#include <cstdio>
#include <string>
#include <utility>

#include "oamspec/errors.hpp"

namespace oam {

void QuadratureConfig::validate() const {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw ConfigError("quadrature.r_max must be a positive finite number");
  }
  if (radial_nodes < 1) throw ConfigError("quadrature.radial_nodes must be >= 1");
  if (panels < 1) throw ConfigError("quadrature.panels must be >= 1");
  if (azimuthal_nodes < 1) throw ConfigError("quadrature.azimuthal_nodes must be >= 1");
  if (!(rel_tol >= 1e-12) || !std::isfinite(rel_tol)) {
    throw ConfigError("quadrature.rel_tol must be >= 1e-12");
  }
}

QuadratureConfig QuadratureConfig::refined() const {
  QuadratureConfig q = *this;
  q.radial_nodes *= 2;
  q.azimuthal_nodes *= 2;
  return q;
}

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw ConfigError("gauss_legendre: n must be >= 1");
  GaussLegendre g;
  if (n == 1) {
    g.nodes = {0.0};
    g.weights = {2.0};
    return g;
  }
  g.nodes.resize(static_cast<std::size_t>(n));
  g.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre_with_derivative(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_with_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    g.nodes[lo] = -x;
    g.nodes[hi] = x;
    g.weights[lo] = w;
    g.weights[hi] = w;
  }
  if (n % 2 == 1) g.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return g;
}

RadialRule make_radial_rule(double r_max, int panels, int nodes_per_panel) {
  if (!(r_max > 0.0) || panels < 1) throw ConfigError("make_radial_rule: bad window");
  const GaussLegendre g = gauss_legendre(nodes_per_panel);
  const double h = r_max / panels;
  RadialRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * g.nodes.size());
  rule.weights.reserve(rule.nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double a = p * h;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
      rule.nodes.push_back(a + 0.5 * h * (g.nodes[k] + 1.0));
      rule.weights.push_back(0.5 * h * g.weights[k]);
    }
  }
  return rule;
}

std::vector<double> azimuthal_nodes(int n) {
  if (n < 1) throw ConfigError("azimuthal_nodes: n must be >= 1");
  std::vector<double> phis(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) phis[static_cast<std::size_t>(k)] = 2.0 * std::numbers::pi * k / n;
  return phis;
}

void require_converged(const QuadratureSum& coarse, const QuadratureSum& fine, double rel_tol,
                       const char* what) {
  const double diff = std::abs(fine.value - coarse.value);
  if (diff <= rel_tol * fine.magnitude) return;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%s not converged under node doubling: change %.3e exceeds %.1e of scale %.3e; "
                "enlarge r_max or node counts",
                what, diff, rel_tol, fine.magnitude);
  throw ConvergenceError(buf);
}

}  // namespace oam
