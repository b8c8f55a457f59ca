#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace oam {

/// Numeric settings shared by every integral in the library.
///
/// The radial interval [0, r_max] is split into `panels` equal panels, each
/// integrated with a `radial_nodes`-point Gauss-Legendre rule. The azimuth
/// uses the trapezoidal rule with `azimuthal_nodes` points, which is
/// spectrally accurate for smooth periodic integrands. A result is accepted
/// only when doubling the node counts reproduces it to `rel_tol`, measured
/// against the integral of |f|.
struct QuadratureConfig {
  double r_max = 8.0;
  int radial_nodes = 32;
  int panels = 8;
  int azimuthal_nodes = 256;
  double rel_tol = 1e-10;

  /// Throws ConfigError on out-of-range fields.
  void validate() const;

  /// Same window, node counts doubled.
  QuadratureConfig refined() const;

  bool operator==(const QuadratureConfig&) const = default;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

/// Composite Gauss-Legendre rule on [0, r_max]; nodes are ordered by panel.
struct RadialRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

RadialRule make_radial_rule(double r_max, int panels, int nodes_per_panel);
inline RadialRule make_radial_rule(const QuadratureConfig& q) {
  return make_radial_rule(q.r_max, q.panels, q.radial_nodes);
}

/// Trapezoidal nodes phi_k = 2 pi k / n with weight 2 pi / n.
std::vector<double> azimuthal_nodes(int n);

/// Value of one quadrature pass plus the matching integral of |f|.
struct QuadratureSum {
  std::complex<double> value;
  double magnitude = 0.0;
};

/// Throws ConvergenceError if `coarse` and `fine` disagree beyond
/// rel_tol * fine.magnitude. `what` names the integral in the message.
void require_converged(const QuadratureSum& coarse, const QuadratureSum& fine, double rel_tol,
                       const char* what);

template <class F>
QuadratureSum apply_rule(const RadialRule& rule, F&& f) {
  QuadratureSum s;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const std::complex<double> v = f(rule.nodes[j]);
    s.value += rule.weights[j] * v;
    s.magnitude += rule.weights[j] * std::abs(v);
  }
  return s;
}

template <class F>
QuadratureSum apply_polar_rule(const RadialRule& rule, std::span<const double> phis, F&& f) {
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(phis.size());
  QuadratureSum s;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    std::complex<double> ring;
    double ring_abs = 0.0;
    for (double phi : phis) {
      const std::complex<double> v = f(rule.nodes[j], phi);
      ring += v;
      ring_abs += std::abs(v);
    }
    s.value += rule.weights[j] * dphi * ring;
    s.magnitude += rule.weights[j] * dphi * ring_abs;
  }
  return s;
}

/// Integral of f over [0, r_max]. `f` is the full integrand: include the
/// Jacobian r yourself. Returns the refined (doubled-node) estimate.
template <class F>
std::complex<double> integrate_radial(F&& f, const QuadratureConfig& quad) {
  quad.validate();
  const QuadratureSum coarse = apply_rule(make_radial_rule(quad), f);
  const QuadratureSum fine = apply_rule(make_radial_rule(quad.refined()), f);
  require_converged(coarse, fine, quad.rel_tol, "radial integral");
  return fine.value;
}

/// Integral of f(r, phi) dr dphi over the disc of radius r_max. As with
/// integrate_radial, the Jacobian r belongs to f.
template <class F>
std::complex<double> integrate_polar_2d(F&& f, const QuadratureConfig& quad) {
  quad.validate();
  const QuadratureConfig fine_cfg = quad.refined();
  const std::vector<double> phi_coarse = azimuthal_nodes(quad.azimuthal_nodes);
  const std::vector<double> phi_fine = azimuthal_nodes(fine_cfg.azimuthal_nodes);
  const QuadratureSum coarse = apply_polar_rule(make_radial_rule(quad), phi_coarse, f);
  const QuadratureSum fine = apply_polar_rule(make_radial_rule(fine_cfg), phi_fine, f);
  require_converged(coarse, fine, quad.rel_tol, "polar integral");
  return fine.value;
}

}  // namespace oam
