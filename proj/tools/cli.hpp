#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oamspec/entanglement.hpp"
#include "oamspec/mode_functions.hpp"
#include "oamspec/quadrature.hpp"
#include "oamspec/spectrum.hpp"

namespace oam::cli {

enum class Command { Spectrum, EntropyTable, ValidatePov, Calibrate };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Command c);
Command parse_command(std::string_view text);

/// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitWindow = 4;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "OAMSPEC_OUTPUT_DIR";

/// Everything one invocation needs. Serializes to JSON (the config-file
/// format); flags given on the command line override file values.
struct RunConfig {
  Command command = Command::Spectrum;

  // scenario
  ModeFamily pump_family = ModeFamily::LG;
  int l_p = 0;
  int pump_p = 0;
  double pump_w0 = 1.0;  ///< LG pump waist
  ModeFamily signal_family = ModeFamily::LG;
  ModeFamily idler_family = ModeFamily::LG;
  int l_window = 0;  ///< 0 = automatic
  double lg_waist = 1.0;
  PovGeometry pov;
  ModeNormalization pov_normalization = ModeNormalization::Raw;
  QuadratureConfig quad;

  // entropy-table
  LogBase log_base = LogBase::e();
  bool normalize_weights = true;
  bool all_conventions = false;
  std::vector<int> l_p_values = default_table_rows();
  std::vector<ScenarioKind> scenarios{std::begin(kAllScenarioKinds), std::end(kAllScenarioKinds)};

  // validate-pov
  std::vector<int> validate_l{0, 1, 2, 3};
  int validate_points = 65;
  double focal_length = 1.0;
  double wavevector = 1.0;
  double validate_threshold = 1e-4;

  // calibrate
  std::vector<double> calibrate_r0{0.125, 0.25, 0.375, 0.5, 0.75, 1.0};
  std::vector<double> calibrate_w0{0.25, 0.375, 0.5, 0.75, 1.0};

  // spectrum extras
  std::optional<std::pair<int, int>> query;
  bool full_grid = false;

  // output
  std::string output_dir;   ///< empty: $OAMSPEC_OUTPUT_DIR, else "."
  std::string output_name;  ///< file stem; empty: per-command default
  OutputFormat format = OutputFormat::Csv;

  /// Throws ConfigError with a field-specific message.
  void validate() const;

  Scenario scenario() const;

  bool operator==(const RunConfig&) const = default;
};

std::string to_json(const RunConfig& cfg);
/// Fields missing from `text` keep their values from `base`.
RunConfig config_from_json(std::string_view text, const RunConfig& base = {});

/// Parses flags (and an optional --config file). Returns nullopt after
/// printing help. Throws ConfigError on bad input.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out);

/// Executes the command, writes the artifact files and a short summary to
/// `log`. Returns one of the kExit* statuses; numeric failures are reported
/// on `err`.
int run(const RunConfig& cfg, std::ostream& log, std::ostream& err);

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oam::cli
