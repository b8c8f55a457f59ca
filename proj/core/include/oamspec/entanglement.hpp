#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oamspec/spectrum.hpp"

namespace oam {

/// Schmidt weights of the biphoton state at fixed pump OAM. The reduced
/// density matrix is diagonal in the OAM basis, so the weights are the
/// anti-diagonal |C|^2 values (normalized or raw).
struct SchmidtDecomposition {
  int l_p = 0;
  std::vector<int> l_s;         ///< ascending, one per weight
  std::vector<double> weights;  ///< lambda_k >= 0
  bool normalized = true;

  /// Number of weights above 1e-14.
  int rank() const;
};

SchmidtDecomposition schmidt_from_spectrum(const SpectrumGrid& grid, bool normalized = true);

/// Logarithm base for the entropy: e, 2, or a user-chosen dimension d.
struct LogBase {
  enum class Kind { E, Two, Dim };
  Kind kind = Kind::E;
  double d = 0.0;  ///< used when kind == Dim; must exceed 1

  static LogBase e() { return {Kind::E, 0.0}; }
  static LogBase two() { return {Kind::Two, 0.0}; }
  static LogBase dim(double d) { return {Kind::Dim, d}; }

  double ln_base() const;
  std::string label() const;  // "e", "2", "d=5"
  bool operator==(const LogBase&) const = default;
};

LogBase parse_log_base(std::string_view text);

/// -sum lambda log lambda with 0 log 0 = 0. With `normalize` the weights are
/// rescaled to sum 1 first.
double von_neumann_entropy(const SchmidtDecomposition& decomp, LogBase base, bool normalize);

/// Everything that fixes the numbers of an entropy table beyond l_p and the
/// scenario: log base, weight normalization, POV mode normalization and POV
/// geometry.
struct EntropyConvention {
  LogBase base = LogBase::e();
  bool normalize_weights = true;
  ModeNormalization pov_normalization = ModeNormalization::Raw;
  PovGeometry pov;

  std::string label() const;
  bool operator==(const EntropyConvention&) const = default;
};

/// Entropy per (l_p, scenario) cell; rows follow l_p_values, columns follow
/// scenarios.
struct EntropyReport {
  std::vector<int> l_p_values;
  std::vector<ScenarioKind> scenarios;
  std::vector<std::vector<double>> entropy;  ///< [row][column]
  std::vector<std::vector<int>> rank;
  std::vector<std::vector<double>> width;    ///< participation ratio
  std::vector<std::vector<int>> window;
  EntropyConvention convention;
};

EntropyReport entropy_table(const std::vector<int>& l_p_values,
                            const std::vector<ScenarioKind>& scenarios,
                            const QuadratureConfig& quad, const EntropyConvention& convention);
EntropyReport entropy_table(const std::vector<int>& l_p_values,
                            const std::vector<ScenarioKind>& scenarios, ProfileCache& cache,
                            const EntropyConvention& convention);

/// The table layout used by default: l_p = 0..4 against all three scenarios.
std::vector<int> default_table_rows();

}  // namespace oam
