#pragma once

#include <complex>
#include <functional>
#include <string>
#include <string_view>

#include "oamspec/quadrature.hpp"

namespace oam {

enum class ModeFamily { LG, BesselGauss, POV };

std::string_view to_string(ModeFamily family);
/// Accepts "LG", "BG"/"BesselGauss", "POV" (case-insensitive).
ModeFamily parse_mode_family(std::string_view text);

/// A transverse mode at the z = 0 plane.
///
/// Field use depends on the family:
///   LG          - w0 is the Gaussian waist; p is the radial index.
///   BesselGauss - w0 is the Gaussian envelope waist; k_r the radial wavevector.
///   POV         - r0 is the ring radius; w0 the ring width.
/// Unused fields are ignored. p must be 0 for non-LG families.
struct ModeSpec {
  ModeFamily family = ModeFamily::LG;
  int l = 0;
  int p = 0;
  double w0 = 1.0;
  double r0 = 1.0;
  double k_r = 1.0;

  static ModeSpec lg(int l, int p = 0, double w0 = 1.0);
  static ModeSpec bessel_gauss(int l, double k_r, double w);
  static ModeSpec pov(int l, double r0, double w0);

  /// Throws ConfigError when an invariant of the family is violated.
  void validate() const;

  ModeSpec with_l(int new_l) const {
    ModeSpec s = *this;
    s.l = new_l;
    return s;
  }

  bool operator==(const ModeSpec&) const = default;
};

/// How POV modes are scaled before entering an overlap. LG modes are
/// unit-norm by construction and unaffected.
enum class ModeNormalization {
  Raw,     ///< closed-form amplitude, l-independent prefactor dropped
  UnitL2,  ///< rescaled to unit L2 norm over the transverse plane
};

std::string_view to_string(ModeNormalization n);
ModeNormalization parse_mode_normalization(std::string_view text);

// All families carry the azimuthal phase exp(+i l phi).

/// Laguerre-Gauss mode at the waist, unit L2 norm for any w0.
std::complex<double> lg_mode(const ModeSpec& spec, double r, double phi);

/// Bessel-Gauss mode J_l(k_r rho) exp(i l theta) exp(-rho^2 / w^2), unnormalized.
std::complex<double> bg_mode(const ModeSpec& spec, double rho, double theta);

/// Practical perfect optical vortex
///   i^{l-1} exp(i l phi) exp(-(r^2 + r0^2) / w0^2) I_l(2 r0 r / w0^2),
/// evaluated through the scaled Bessel function so large 2 r0 r / w0^2 cannot
/// overflow. The lens-dependent amplitude w/w0 is omitted.
std::complex<double> pov_mode(const ModeSpec& spec, double r, double phi);

/// The phase-free radial factor of the mode, real for every family.
double radial_profile(const ModeSpec& spec, double r);

/// r- and phi-independent phase of the mode (i^{l-1} for POV, 1 otherwise).
std::complex<double> constant_phase(const ModeSpec& spec);

/// Family dispatch: constant_phase * radial_profile * exp(i l phi).
std::complex<double> evaluate_mode(const ModeSpec& spec, double r, double phi);

/// A mode together with an amplitude scale.
class Mode {
 public:
  explicit Mode(ModeSpec spec, double scale = 1.0);

  const ModeSpec& spec() const noexcept { return spec_; }
  double scale() const noexcept { return scale_; }

  double radial(double r) const { return scale_ * radial_profile(spec_, r); }
  std::complex<double> operator()(double r, double phi) const {
    return scale_ * evaluate_mode(spec_, r, phi);
  }

 private:
  ModeSpec spec_;
  double scale_;
};

/// sqrt of the integral of |psi|^2 r dr dphi over the quadrature window.
double l2_norm(const Mode& mode, const QuadratureConfig& quad);

/// Returns the mode rescaled to unit L2 norm. Throws DegenerateError for a
/// zero-norm mode.
Mode l2_normalize(const Mode& mode, const QuadratureConfig& quad);

/// Applies the normalization policy (POV only; other families untouched).
Mode prepare_mode(const ModeSpec& spec, ModeNormalization pov_policy, const QuadratureConfig& quad);

using ModeFunction = std::function<std::complex<double>(double r, double phi)>;

/// Normalizes an arbitrary mode function with the 2D polar rule.
ModeFunction l2_normalize(ModeFunction mode, const QuadratureConfig& quad);

}  // namespace oam
