#include "oamspec/calibration.hpp"

#include <cmath>
#include <limits>

#include "oamspec/errors.hpp"

namespace oam {
namespace {

using Table = std::array<std::array<double, 3>, 5>;

// Spectra for the five rows of one scenario column.
std::array<SpectrumGrid, 5> column_spectra(ScenarioKind kind, const PovGeometry& pov,
                                           ModeNormalization norm, ProfileCache& cache) {
  std::array<SpectrumGrid, 5> out;
  for (int l_p = 0; l_p < 5; ++l_p) {
    out[static_cast<std::size_t>(l_p)] = build_spectrum(Scenario::make(kind, l_p, pov, norm), cache);
  }
  return out;
}

double cell_entropy(const SpectrumGrid& g, LogBase base, bool normalize) {
  return von_neumann_entropy(schmidt_from_spectrum(g, normalize), base, normalize);
}

}  // namespace

const std::array<std::array<double, 3>, 5>& reference_entropies() {
  static const Table table{{
      {1.8537, 0.8850, 0.3662},
      {2.4014, 1.3921, 0.8165},
      {2.7030, 1.6016, 1.0025},
      {2.9133, 1.6998, 1.1361},
      {3.0683, 1.7469, 1.2397},
  }};
  return table;
}

CalibrationEntry score(const EntropyConvention& convention, const Table& entropy) {
  const Table& ref = reference_entropies();
  CalibrationEntry e;
  e.convention = convention;
  e.entropy = entropy;
  e.column_ordering = true;
  e.rows_increasing = true;
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      const double dev = std::abs(entropy[r][c] - ref[r][c]) / ref[r][c];
      e.column_deviation[c] = std::max(e.column_deviation[c], dev);
      e.max_relative_deviation = std::max(e.max_relative_deviation, dev);
      if (c > 0 && !(entropy[r][c - 1] > entropy[r][c])) e.column_ordering = false;
      if (r > 0 && !(entropy[r][c] > entropy[r - 1][c])) e.rows_increasing = false;
    }
  }
  return e;
}

CalibrationReport calibrate(const CalibrationGrid& grid, const QuadratureConfig& quad) {
  if (grid.bases.empty() || grid.normalize_weights.empty() || grid.pov_normalizations.empty() ||
      grid.r0_values.empty() || grid.w0_values.empty()) {
    throw ConfigError("calibration grid has an empty axis");
  }
  ProfileCache cache(quad);
  const std::array<SpectrumGrid, 5> lg =
      column_spectra(ScenarioKind::LgLgLg, PovGeometry{}, ModeNormalization::Raw, cache);

  const std::size_t n_conv =
      grid.bases.size() * grid.normalize_weights.size() * grid.pov_normalizations.size();
  CalibrationReport rep;
  rep.per_convention.resize(n_conv);
  for (auto& e : rep.per_convention) e.max_relative_deviation = std::numeric_limits<double>::infinity();

  std::size_t norm_idx = 0;
  for (ModeNormalization pov_norm : grid.pov_normalizations) {
    for (double r0 : grid.r0_values) {
      for (double w0 : grid.w0_values) {
        const PovGeometry geom{r0, w0};
        ++rep.geometries_scanned;
        std::array<SpectrumGrid, 5> pl, pp;
        try {
          pl = column_spectra(ScenarioKind::PovLgLg, geom, pov_norm, cache);
          pp = column_spectra(ScenarioKind::PovPovPov, geom, pov_norm, cache);
        } catch (const WindowTooSmallError&) {
          ++rep.geometries_skipped;
          continue;
        } catch (const ConvergenceError&) {
          ++rep.geometries_skipped;
          continue;
        }
        std::size_t k = 0;
        for (LogBase base : grid.bases) {
          for (bool normw : grid.normalize_weights) {
            Table t{};
            for (std::size_t r = 0; r < 5; ++r) {
              t[r][0] = cell_entropy(lg[r], base, normw);
              t[r][1] = cell_entropy(pl[r], base, normw);
              t[r][2] = cell_entropy(pp[r], base, normw);
            }
            const CalibrationEntry e = score(EntropyConvention{base, normw, pov_norm, geom}, t);
            // slot layout: pov normalization outermost, then base, then weights
            CalibrationEntry& slot =
                rep.per_convention[norm_idx * grid.bases.size() * grid.normalize_weights.size() + k];
            if (e.max_relative_deviation < slot.max_relative_deviation) slot = e;
            ++k;
          }
        }
      }
    }
    ++norm_idx;
  }
  if (rep.geometries_skipped == rep.geometries_scanned) {
    throw ConvergenceError("calibration: no POV geometry in the grid could be evaluated");
  }
  rep.best = rep.per_convention.front();
  for (const auto& e : rep.per_convention) {
    if (e.max_relative_deviation < rep.best.max_relative_deviation) rep.best = e;
  }
  return rep;
}

}  // namespace oam
