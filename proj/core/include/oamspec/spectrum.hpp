#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "oamspec/mode_functions.hpp"
#include "oamspec/overlap.hpp"
#include "oamspec/quadrature.hpp"

namespace oam {

/// Ring geometry shared by every POV mode of a scenario (pump and
/// projections).
struct PovGeometry {
  double r0 = 0.25;
  double w0 = 0.5;

  bool operator==(const PovGeometry&) const = default;
};

/// The three pump/projection combinations compared throughout.
enum class ScenarioKind { LgLgLg, PovLgLg, PovPovPov };

std::string_view to_string(ScenarioKind kind);  // "LG->LG,LG" etc.
ScenarioKind parse_scenario_kind(std::string_view text);
inline constexpr ScenarioKind kAllScenarioKinds[] = {ScenarioKind::LgLgLg, ScenarioKind::PovLgLg,
                                                     ScenarioKind::PovPovPov};

/// Pump plus projection bases. Projections always have p = 0; LG
/// projections use `lg_waist`, POV projections use `pov`.
struct Scenario {
  ModeSpec pump;
  ModeFamily signal_family = ModeFamily::LG;
  ModeFamily idler_family = ModeFamily::LG;
  /// Half-width W: l_s and l_i both range over [-W, W]. 0 selects the
  /// smallest window, grown from max(8, |l_p| + 6) in steps of 8, whose edge
  /// probabilities fall below kWindowEdgeRatio of the maximum.
  int l_window = 0;
  double lg_waist = 1.0;
  PovGeometry pov;
  ModeNormalization pov_normalization = ModeNormalization::Raw;

  static Scenario make(ScenarioKind kind, int l_p, PovGeometry pov = {},
                       ModeNormalization norm = ModeNormalization::Raw);

  ModeSpec signal_shape() const;
  ModeSpec idler_shape() const;
  std::string label() const;
  void validate() const;
};

inline constexpr double kWindowEdgeRatio = 1e-6;
inline constexpr int kMaxAutoWindow = 160;

/// Normalized joint OAM distribution over the conserving anti-diagonal
/// l_i = l_p - l_s. Non-conserving pairs carry probability 0.
struct SpectrumGrid {
  Scenario scenario;
  int l_p = 0;
  int window = 0;
  std::vector<int> l_s;                          ///< ascending
  std::vector<std::complex<double>> amplitudes;  ///< C_{l_s, l_p - l_s}
  std::vector<double> raw_weights;               ///< |C|^2, arbitrary units
  std::vector<double> probs;                     ///< raw_weights / sum
  double edge_ratio = 0.0;  ///< max edge probability / max probability
  double tail_mass = 0.0;   ///< geometric extrapolation of the cut-off tails
  bool monotone_tails = true;

  int l_i(std::size_t k) const { return l_p - l_s[k]; }
  /// 0 for non-conserving or out-of-window pairs.
  double probability(int ls, int li) const;
};

/// Throws WindowTooSmallError when an explicit window (or the automatic
/// limit) leaves edge probabilities above kWindowEdgeRatio of the maximum.
SpectrumGrid build_spectrum(const Scenario& scenario, const QuadratureConfig& quad);
SpectrumGrid build_spectrum(const Scenario& scenario, ProfileCache& cache);

struct SpectrumPeak {
  int l_s = 0;
  int l_i = 0;
  double probability = 0.0;
  bool global = false;
};

/// Local maxima along the anti-diagonal, by probability descending, exact
/// ties by l_s ascending. Any peak with global == false is a secondary
/// maximum.
std::vector<SpectrumPeak> find_maxima(const SpectrumGrid& grid);

/// Participation ratio 1 / sum p^2 of the anti-diagonal probabilities.
double spectrum_width(const SpectrumGrid& grid);
double participation_ratio(const std::vector<double>& probs);

}  // namespace oam
