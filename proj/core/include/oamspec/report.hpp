#pragma once

#include <string>
#include <vector>

#include "oamspec/calibration.hpp"
#include "oamspec/entanglement.hpp"
#include "oamspec/lens_oracle.hpp"
#include "oamspec/spectrum.hpp"

namespace oam {

// Every number is written with 12 significant digits so that identical
// inputs give byte-identical files.

/// "%.12g"
std::string format_number(double x);

/// Rounds x to the value format_number prints.
double round_to_12_digits(double x);

/// `l_s,l_i,probability` rows. With `full_grid`, every pair in the
/// (2W+1)^2 square is written (non-conserving pairs as 0); otherwise only
/// the anti-diagonal.
std::string spectrum_csv(const SpectrumGrid& grid, bool full_grid = false);
std::string spectrum_json(const SpectrumGrid& grid);

std::string entropy_reports_json(const std::vector<EntropyReport>& reports);
/// Aligned text table, one block per report.
std::string entropy_reports_text(const std::vector<EntropyReport>& reports);

/// Columns l,r,oracle_magnitude,closed_form_magnitude,relative_difference.
std::string pov_validation_csv(const std::vector<PovOracleProfile>& profiles);
std::string pov_validation_json(const std::vector<PovOracleProfile>& profiles, double threshold);

std::string calibration_json(const CalibrationReport& report);
std::string calibration_text(const CalibrationReport& report);

}  // namespace oam
