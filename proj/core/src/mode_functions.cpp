#include "oamspec/mode_functions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "oamspec/errors.hpp"
#include "oamspec/special_functions.hpp"

namespace oam {
namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// i^n for any integer n, exact.
std::complex<double> i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::complex<double> azimuthal_phase(int l, double phi) {
  if (l == 0) return {1.0, 0.0};
  return std::polar(1.0, l * phi);
}

double lg_radial(const ModeSpec& s, double r) {
  const int a = std::abs(s.l);
  const double x = r / s.w0;
  // sqrt(2 p! / (pi (|l|+p)!)) through lgamma to stay finite at large |l|
  const double log_norm = 0.5 * (std::log(2.0 / std::numbers::pi) + std::lgamma(s.p + 1.0) -
                                 std::lgamma(a + s.p + 1.0));
  double radial = std::exp(log_norm - x * x);
  if (a > 0) radial *= std::pow(std::numbers::sqrt2 * x, a);
  if (s.p > 0) radial *= laguerre_poly(s.p, a, 2.0 * x * x);
  return radial / s.w0;
}

double bg_radial(const ModeSpec& s, double rho) {
  return bessel_j(s.l, s.k_r * rho) * std::exp(-(rho * rho) / (s.w0 * s.w0));
}

double pov_radial(const ModeSpec& s, double r) {
  const double w2 = s.w0 * s.w0;
  const double d = r - s.r0;
  // exp(-(r^2 + r0^2)/w0^2) I_l(x) == exp(-(r - r0)^2/w0^2) e^{-x} I_l(x), x = 2 r0 r / w0^2
  return std::exp(-d * d / w2) * bessel_i_scaled(s.l, 2.0 * s.r0 * r / w2);
}

}  // namespace

std::string_view to_string(ModeFamily family) {
  switch (family) {
    case ModeFamily::LG: return "LG";
    case ModeFamily::BesselGauss: return "BG";
    case ModeFamily::POV: return "POV";
  }
  return "?";
}

ModeFamily parse_mode_family(std::string_view text) {
  const std::string t = lower(text);
  if (t == "lg") return ModeFamily::LG;
  if (t == "bg" || t == "besselgauss" || t == "bessel-gauss") return ModeFamily::BesselGauss;
  if (t == "pov") return ModeFamily::POV;
  throw ConfigError("unknown mode family '" + std::string(text) + "' (expected LG, BG or POV)");
}

std::string_view to_string(ModeNormalization n) {
  return n == ModeNormalization::Raw ? "raw" : "unit";
}

ModeNormalization parse_mode_normalization(std::string_view text) {
  const std::string t = lower(text);
  if (t == "raw") return ModeNormalization::Raw;
  if (t == "unit" || t == "l2" || t == "unit-l2") return ModeNormalization::UnitL2;
  throw ConfigError("unknown mode normalization '" + std::string(text) + "' (expected raw or unit)");
}

ModeSpec ModeSpec::lg(int l, int p, double w0) {
  ModeSpec s;
  s.family = ModeFamily::LG;
  s.l = l;
  s.p = p;
  s.w0 = w0;
  return s;
}

ModeSpec ModeSpec::bessel_gauss(int l, double k_r, double w) {
  ModeSpec s;
  s.family = ModeFamily::BesselGauss;
  s.l = l;
  s.k_r = k_r;
  s.w0 = w;
  return s;
}

ModeSpec ModeSpec::pov(int l, double r0, double w0) {
  ModeSpec s;
  s.family = ModeFamily::POV;
  s.l = l;
  s.r0 = r0;
  s.w0 = w0;
  return s;
}

void ModeSpec::validate() const {
  if (!(w0 > 0.0) || !std::isfinite(w0)) throw ConfigError("mode.w0 must be positive");
  if (p < 0) throw ConfigError("mode.p must be nonnegative");
  if (family != ModeFamily::LG && p != 0) {
    throw ConfigError("mode.p must be 0 for " + std::string(to_string(family)) + " modes");
  }
  if (family == ModeFamily::POV && (!(r0 > 0.0) || !std::isfinite(r0))) {
    throw ConfigError("mode.r0 must be positive for POV modes");
  }
  if (family == ModeFamily::BesselGauss && (!(k_r > 0.0) || !std::isfinite(k_r))) {
    throw ConfigError("mode.k_r must be positive for Bessel-Gauss modes");
  }
}

std::complex<double> lg_mode(const ModeSpec& spec, double r, double phi) {
  return lg_radial(spec, r) * azimuthal_phase(spec.l, phi);
}

std::complex<double> bg_mode(const ModeSpec& spec, double rho, double theta) {
  return bg_radial(spec, rho) * azimuthal_phase(spec.l, theta);
}

std::complex<double> pov_mode(const ModeSpec& spec, double r, double phi) {
  return i_power(spec.l - 1) * pov_radial(spec, r) * azimuthal_phase(spec.l, phi);
}

double radial_profile(const ModeSpec& spec, double r) {
  switch (spec.family) {
    case ModeFamily::LG: return lg_radial(spec, r);
    case ModeFamily::BesselGauss: return bg_radial(spec, r);
    case ModeFamily::POV: return pov_radial(spec, r);
  }
  return 0.0;
}

std::complex<double> constant_phase(const ModeSpec& spec) {
  return spec.family == ModeFamily::POV ? i_power(spec.l - 1) : std::complex<double>{1.0, 0.0};
}

std::complex<double> evaluate_mode(const ModeSpec& spec, double r, double phi) {
  return constant_phase(spec) * radial_profile(spec, r) * azimuthal_phase(spec.l, phi);
}

Mode::Mode(ModeSpec spec, double scale) : spec_(spec), scale_(scale) { spec_.validate(); }

double l2_norm(const Mode& mode, const QuadratureConfig& quad) {
  // |psi|^2 is phi-independent, so the azimuthal integral is exactly 2 pi.
  const std::complex<double> v = integrate_radial(
      [&](double r) {
        const double a = mode.radial(r);
        return std::complex<double>(a * a * r, 0.0);
      },
      quad);
  return std::sqrt(2.0 * std::numbers::pi * v.real());
}

Mode l2_normalize(const Mode& mode, const QuadratureConfig& quad) {
  const double norm = l2_norm(mode, quad);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DegenerateError("cannot normalize a mode with zero or non-finite L2 norm");
  }
  return Mode(mode.spec(), mode.scale() / norm);
}

Mode prepare_mode(const ModeSpec& spec, ModeNormalization pov_policy, const QuadratureConfig& quad) {
  Mode mode(spec);
  if (spec.family == ModeFamily::POV && pov_policy == ModeNormalization::UnitL2) {
    return l2_normalize(mode, quad);
  }
  return mode;
}

ModeFunction l2_normalize(ModeFunction mode, const QuadratureConfig& quad) {
  const std::complex<double> v = integrate_polar_2d(
      [&](double r, double phi) { return std::complex<double>(std::norm(mode(r, phi)) * r, 0.0); },
      quad);
  const double norm = std::sqrt(v.real());
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DegenerateError("cannot normalize a mode with zero or non-finite L2 norm");
  }
  return [f = std::move(mode), inv = 1.0 / norm](double r, double phi) { return inv * f(r, phi); };
}

}  // namespace oam
