#pragma once

#include <complex>
#include <span>
#include <vector>

#include "oamspec/mode_functions.hpp"
#include "oamspec/quadrature.hpp"

namespace oam {

/// Thin-lens Fourier transform parameters: focal length f and total
/// wavevector k = 2 pi / lambda. Only the ratio k / f sets the scale.
struct LensGeometry {
  double focal_length = 1.0;
  double wavevector = 1.0;
};

/// The Bessel-Gauss source that a lens maps onto a POV ring of radius r0
/// and width w0: k_r = r0 k / f, w = 2 f / (k w0).
ModeSpec bessel_gauss_source_for_pov(int l, double r0, double w0, const LensGeometry& lens);

/// The lens-dependent amplitude w / w0 dropped by pov_mode.
double pov_lens_amplitude(double w0, const LensGeometry& lens);

/// (k / (i 2 pi f)) * integral psi(rho, theta) exp(-i k/f rho r cos(theta - phi)) rho drho dtheta
///
/// The source is sampled once per quadrature pass and reused for every
/// output radius. Each output point must agree under node doubling, else
/// ConvergenceError. `quad.r_max` is the source window in rho.
std::vector<std::complex<double>> fourier_lens_transform(const ModeFunction& source,
                                                         const LensGeometry& lens,
                                                         std::span<const double> radii, double phi,
                                                         const QuadratureConfig& quad);

std::complex<double> fourier_lens_transform(const ModeFunction& source, const LensGeometry& lens,
                                            double r, double phi, const QuadratureConfig& quad);

/// Quadrature window suited to the Bessel-Gauss source of a (r0, w0) ring:
/// r_max covers the envelope down to 1e-14, node counts resolve the kernel
/// oscillation up to `r_eval_max`.
QuadratureConfig lens_quadrature_for(double r0, double w0, const LensGeometry& lens,
                                     double r_eval_max);

/// Radial comparison of the numerically transformed Bessel-Gauss mode with
/// the closed-form POV.
struct PovOracleProfile {
  int l = 0;
  std::vector<double> radius;
  std::vector<double> oracle_magnitude;  ///< |transform of bg_mode|
  std::vector<double> closed_magnitude;  ///< (w/w0) |pov_mode|
  double relative_l2_error = 0.0;
  /// Phase of transform / closed form at the ring radius.
  double phase_offset = 0.0;
};

/// Samples r on [0, r0 + 6 w0] with `points` equally spaced radii.
PovOracleProfile validate_pov(int l, double r0, double w0, const LensGeometry& lens, int points);
PovOracleProfile validate_pov(int l, double r0, double w0, const LensGeometry& lens, int points,
                              const QuadratureConfig& quad);

}  // namespace oam
