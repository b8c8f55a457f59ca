#pragma once

#include <array>
#include <vector>

#include "oamspec/entanglement.hpp"

namespace oam {

/// Target entropy matrix that calibration scores against: rows l_p = 0..4,
/// columns LG->LG,LG, POV->LG,LG, POV->POV,POV.
const std::array<std::array<double, 3>, 5>& reference_entropies();

/// Conventions and POV geometries to scan.
struct CalibrationGrid {
  std::vector<LogBase> bases{LogBase::e(), LogBase::two()};
  std::vector<bool> normalize_weights{true, false};
  std::vector<ModeNormalization> pov_normalizations{ModeNormalization::Raw,
                                                    ModeNormalization::UnitL2};
  std::vector<double> r0_values{0.125, 0.25, 0.375, 0.5, 0.75, 1.0};
  std::vector<double> w0_values{0.25, 0.375, 0.5, 0.75, 1.0};
};

struct CalibrationEntry {
  EntropyConvention convention;
  double max_relative_deviation = 0.0;
  std::array<double, 3> column_deviation{};  ///< max relative deviation per column
  std::array<std::array<double, 3>, 5> entropy{};
  bool column_ordering = false;  ///< S(LG) > S(POV->LG) > S(POV->POV) in every row
  bool rows_increasing = false;  ///< every column strictly increasing in l_p
};

struct CalibrationReport {
  /// Best POV geometry for each (base, weight normalization, POV
  /// normalization) combination, in grid order.
  std::vector<CalibrationEntry> per_convention;
  CalibrationEntry best;
  int geometries_scanned = 0;
  /// Geometries whose spectra failed to converge or outgrew the window.
  int geometries_skipped = 0;
};

CalibrationReport calibrate(const CalibrationGrid& grid, const QuadratureConfig& quad);

/// Scores one computed 5x3 table against reference_entropies().
CalibrationEntry score(const EntropyConvention& convention,
                       const std::array<std::array<double, 3>, 5>& entropy);

}  // namespace oam
