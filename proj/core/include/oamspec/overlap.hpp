#pragma once

#include <complex>
#include <map>
#include <string_view>
#include <tuple>
#include <vector>

#include "oamspec/mode_functions.hpp"
#include "oamspec/quadrature.hpp"

namespace oam {

enum class CoefficientMethod { ClosedForm, RadialQuadrature, Full2D };

std::string_view to_string(CoefficientMethod m);

/// Biphoton amplitude C_{l_s, l_i} in arbitrary units.
struct Coefficient {
  int l_s = 0;
  int l_i = 0;
  std::complex<double> value;
  CoefficientMethod method = CoefficientMethod::RadialQuadrature;
};

/// Overlap integral of pump * conj(signal) * conj(idler) over the transverse
/// plane. With the common exp(+i l phi) convention the azimuthal integral is
/// 2 pi when l_p = l_s + l_i and exactly zero otherwise; non-conserving
/// triples return 0 without integrating.
///
/// RadialQuadrature integrates the radial profiles once the azimuth is
/// resolved analytically; Full2D integrates over (r, phi) numerically and
/// exists as a cross-check. Throws ConvergenceError on non-convergence or
/// when the window truncates the integrand above 1e-12 of its peak.
Coefficient coefficient(const Mode& pump, const Mode& signal, const Mode& idler,
                        const QuadratureConfig& quad,
                        CoefficientMethod method = CoefficientMethod::RadialQuadrature);

/// Convenience overload: POV modes are scaled per `pov_policy` first.
Coefficient coefficient(const ModeSpec& pump, const ModeSpec& signal, const ModeSpec& idler,
                        const QuadratureConfig& quad,
                        ModeNormalization pov_policy = ModeNormalization::Raw,
                        CoefficientMethod method = CoefficientMethod::RadialQuadrature);

/// Analytic amplitude for LG pump and projections with p = 0 and w0 = 1:
///   P (2/3)^L L! / sqrt(|l_p|! |l_s|! |l_i|!),  L = (|l_p| + |l_s| + |l_i|) / 2,
///   P = (1/3) sqrt(8 / pi).
/// Returns 0 for non-conserving triples.
double closed_form_coefficient(int l_p, int l_s, int l_i);

/// The constant P of closed_form_coefficient.
double closed_form_prefactor();

/// Radial profiles of one mode family on a fixed quadrature pair, filled
/// lazily per azimuthal index. Coefficients assembled from the same table
/// are bitwise reproducible and share the Bessel evaluations.
class ProfileTable {
 public:
  /// `shape` supplies family and geometry; its l is ignored.
  ProfileTable(const ModeSpec& shape, ModeNormalization pov_policy, const QuadratureConfig& quad);

  struct Entry {
    std::vector<double> coarse;  ///< scaled profile on the base rule
    std::vector<double> fine;    ///< scaled profile on the doubled rule
    double at_edge = 0.0;        ///< scaled profile at r_max
    double scale = 1.0;
    std::complex<double> phase;  ///< constant_phase of the mode
  };

  const Entry& entry(int l);
  ModeSpec spec_for(int l) const { return shape_.with_l(l); }
  const QuadratureConfig& quadrature() const noexcept { return quad_; }
  const RadialRule& coarse_rule() const noexcept { return coarse_; }
  const RadialRule& fine_rule() const noexcept { return fine_; }

 private:
  ModeSpec shape_;
  ModeNormalization policy_;
  QuadratureConfig quad_;
  RadialRule coarse_;
  RadialRule fine_;
  std::map<int, Entry> entries_;
};

/// Coefficient from tabulated profiles; same arithmetic as coefficient().
Coefficient coefficient(ProfileTable& pump, int l_p, ProfileTable& signal, int l_s,
                        ProfileTable& idler, int l_i);

/// Tables keyed by (family, geometry, normalization), for batch work that
/// revisits the same projection bases.
class ProfileCache {
 public:
  explicit ProfileCache(QuadratureConfig quad) : quad_(quad) {}

  ProfileTable& table(const ModeSpec& shape, ModeNormalization pov_policy);
  const QuadratureConfig& quadrature() const noexcept { return quad_; }

 private:
  using Key = std::tuple<int, int, double, double, double, int>;
  QuadratureConfig quad_;
  std::map<Key, ProfileTable> tables_;
};

}  // namespace oam
