#include "oamspec/lens_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oamspec/errors.hpp"

namespace oam {
namespace {

struct SampledSource {
  RadialRule rule;
  std::vector<double> phis;
  std::vector<std::complex<double>> values;  // row-major: radial node x phi
};

SampledSource sample(const ModeFunction& source, const QuadratureConfig& q) {
  SampledSource s{make_radial_rule(q), azimuthal_nodes(q.azimuthal_nodes), {}};
  s.values.reserve(s.rule.size() * s.phis.size());
  for (double rho : s.rule.nodes) {
    for (double theta : s.phis) s.values.push_back(source(rho, theta));
  }
  return s;
}

QuadratureSum transform_once(const SampledSource& s, double scale, double r, double phi) {
  const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(s.phis.size());
  std::vector<double> cosines(s.phis.size());
  for (std::size_t t = 0; t < s.phis.size(); ++t) cosines[t] = std::cos(s.phis[t] - phi);
  QuadratureSum sum;
  for (std::size_t j = 0; j < s.rule.size(); ++j) {
    const double rho = s.rule.nodes[j];
    const double a = scale * rho * r;
    std::complex<double> ring;
    double ring_abs = 0.0;
    const std::complex<double>* row = &s.values[j * s.phis.size()];
    for (std::size_t t = 0; t < s.phis.size(); ++t) {
      const std::complex<double> v = row[t] * std::polar(1.0, -a * cosines[t]);
      ring += v;
      ring_abs += std::abs(row[t]);
    }
    const double w = s.rule.weights[j] * dtheta * rho;
    sum.value += w * ring;
    sum.magnitude += w * ring_abs;
  }
  return sum;
}

}  // namespace

ModeSpec bessel_gauss_source_for_pov(int l, double r0, double w0, const LensGeometry& lens) {
  const double ratio = lens.wavevector / lens.focal_length;
  return ModeSpec::bessel_gauss(l, r0 * ratio, 2.0 / (ratio * w0));
}

double pov_lens_amplitude(double w0, const LensGeometry& lens) {
  const double w = 2.0 * lens.focal_length / (lens.wavevector * w0);
  return w / w0;
}

std::vector<std::complex<double>> fourier_lens_transform(const ModeFunction& source,
                                                         const LensGeometry& lens,
                                                         std::span<const double> radii, double phi,
                                                         const QuadratureConfig& quad) {
  quad.validate();
  if (!(lens.focal_length > 0.0) || !(lens.wavevector > 0.0)) {
    throw ConfigError("lens focal length and wavevector must be positive");
  }
  const double scale = lens.wavevector / lens.focal_length;
  const std::complex<double> prefactor =
      scale / (std::complex<double>(0.0, 1.0) * 2.0 * std::numbers::pi);
  const SampledSource coarse = sample(source, quad);
  const SampledSource fine = sample(source, quad.refined());
  std::vector<std::complex<double>> out;
  out.reserve(radii.size());
  for (double r : radii) {
    const QuadratureSum c = transform_once(coarse, scale, r, phi);
    const QuadratureSum f = transform_once(fine, scale, r, phi);
    require_converged(c, f, quad.rel_tol, "Fourier-lens transform");
    out.push_back(prefactor * f.value);
  }
  return out;
}

std::complex<double> fourier_lens_transform(const ModeFunction& source, const LensGeometry& lens,
                                            double r, double phi, const QuadratureConfig& quad) {
  const double radii[] = {r};
  return fourier_lens_transform(source, lens, radii, phi, quad).front();
}

QuadratureConfig lens_quadrature_for(double r0, double w0, const LensGeometry& lens,
                                     double r_eval_max) {
  const ModeSpec src = bessel_gauss_source_for_pov(0, r0, w0, lens);
  const double scale = lens.wavevector / lens.focal_length;
  QuadratureConfig q;
  q.r_max = src.w0 * std::sqrt(std::log(1e14));
  // Radial oscillation: J_l(k_r rho) against the kernel's Bessel factor.
  const double cycles = q.r_max * (src.k_r + scale * r_eval_max) / (2.0 * std::numbers::pi);
  q.panels = std::max(8, static_cast<int>(std::ceil(cycles / 2.0)));
  q.radial_nodes = 24;
  // Trapezoid in theta is exact once the node count exceeds the largest
  // Fourier index present, about scale * r_max * r + |l| + margin.
  const double band = scale * q.r_max * r_eval_max;
  int n = 64;
  while (n < band + 64.0) n *= 2;
  q.azimuthal_nodes = n;
  q.rel_tol = 1e-10;
  return q;
}

PovOracleProfile validate_pov(int l, double r0, double w0, const LensGeometry& lens, int points) {
  return validate_pov(l, r0, w0, lens, points, lens_quadrature_for(r0, w0, lens, r0 + 6.0 * w0));
}

PovOracleProfile validate_pov(int l, double r0, double w0, const LensGeometry& lens, int points,
                              const QuadratureConfig& quad) {
  if (points < 2) throw ConfigError("validate_pov needs at least two radial points");
  const ModeSpec bg = bessel_gauss_source_for_pov(l, r0, w0, lens);
  const ModeSpec pov = ModeSpec::pov(l, r0, w0);
  bg.validate();
  pov.validate();

  PovOracleProfile prof;
  prof.l = l;
  const double r_hi = r0 + 6.0 * w0;
  for (int j = 0; j < points; ++j) prof.radius.push_back(r_hi * j / (points - 1));

  // The ring radius rides along as the last sample for the phase report.
  std::vector<double> radii = prof.radius;
  radii.push_back(r0);
  const ModeFunction source = [bg](double rho, double theta) { return bg_mode(bg, rho, theta); };
  const std::vector<std::complex<double>> oracle =
      fourier_lens_transform(source, lens, radii, 0.0, quad);

  const double amp = pov_lens_amplitude(w0, lens);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < prof.radius.size(); ++j) {
    const double o = std::abs(oracle[j]);
    const double c = amp * std::abs(pov_mode(pov, prof.radius[j], 0.0));
    prof.oracle_magnitude.push_back(o);
    prof.closed_magnitude.push_back(c);
    num += (o - c) * (o - c);
    den += c * c;
  }
  prof.relative_l2_error = std::sqrt(num / den);
  prof.phase_offset = std::arg(oracle.back() / pov_mode(pov, r0, 0.0));
  return prof;
}

}  // namespace oam
