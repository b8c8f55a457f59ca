#include "oamspec/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "oamspec/errors.hpp"

namespace oam {
namespace {

std::string squash(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

ModeSpec projection_shape(const Scenario& s, ModeFamily family) {
  if (family == ModeFamily::LG) return ModeSpec::lg(0, 0, s.lg_waist);
  return ModeSpec::pov(0, s.pov.r0, s.pov.w0);
}

// Tail beyond one window edge, extrapolated from the last two probabilities.
double tail_estimate(double edge, double inner) {
  if (edge <= 0.0) return 0.0;
  if (inner <= edge) return edge;
  const double q = edge / inner;
  return edge * q / (1.0 - q);
}

bool tails_decay(const std::vector<double>& p) {
  if (p.empty()) return true;
  const auto top = std::max_element(p.begin(), p.end());
  // Outermost local maxima on each side, then strict decay outward.
  std::size_t left = static_cast<std::size_t>(top - p.begin());
  std::size_t right = left;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const bool lo = k == 0 || p[k] >= p[k - 1];
    const bool hi = k + 1 == p.size() || p[k] >= p[k + 1];
    if (lo && hi && p[k] > 0.0) {
      left = std::min(left, k);
      right = std::max(right, k);
    }
  }
  for (std::size_t k = left; k > 0; --k) {
    if (p[k - 1] > p[k]) return false;
  }
  for (std::size_t k = right; k + 1 < p.size(); ++k) {
    if (p[k + 1] > p[k]) return false;
  }
  return true;
}

SpectrumGrid assemble(const Scenario& scenario, ProfileCache& cache, int window) {
  const int l_p = scenario.pump.l;
  ProfileTable& pump = cache.table(scenario.pump, scenario.pov_normalization);
  ProfileTable& sig = cache.table(scenario.signal_shape(), scenario.pov_normalization);
  ProfileTable& idl = cache.table(scenario.idler_shape(), scenario.pov_normalization);

  SpectrumGrid g;
  g.scenario = scenario;
  g.scenario.l_window = window;
  g.l_p = l_p;
  g.window = window;
  for (int ls = std::max(-window, l_p - window); ls <= std::min(window, l_p + window); ++ls) {
    const Coefficient c = coefficient(pump, l_p, sig, ls, idl, l_p - ls);
    g.l_s.push_back(ls);
    g.amplitudes.push_back(c.value);
    g.raw_weights.push_back(std::norm(c.value));
  }
  double total = 0.0;
  for (double w : g.raw_weights) total += w;
  if (!(total > 0.0)) throw DegenerateError("spectrum has zero total weight: " + scenario.label());
  g.probs.reserve(g.raw_weights.size());
  for (double w : g.raw_weights) g.probs.push_back(w / total);

  const double peak = *std::max_element(g.probs.begin(), g.probs.end());
  const std::size_t n = g.probs.size();
  g.edge_ratio = std::max(g.probs.front(), g.probs.back()) / peak;
  if (n >= 2) {
    g.tail_mass = tail_estimate(g.probs.front(), g.probs[1]) +
                  tail_estimate(g.probs.back(), g.probs[n - 2]);
  } else {
    g.tail_mass = 0.0;
  }
  g.monotone_tails = tails_decay(g.probs);
  return g;
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::LgLgLg: return "LG->LG,LG";
    case ScenarioKind::PovLgLg: return "POV->LG,LG";
    case ScenarioKind::PovPovPov: return "POV->POV,POV";
  }
  return "?";
}

ScenarioKind parse_scenario_kind(std::string_view text) {
  const std::string t = squash(text);
  if (t == "lglglg") return ScenarioKind::LgLgLg;
  if (t == "povlglg") return ScenarioKind::PovLgLg;
  if (t == "povpovpov") return ScenarioKind::PovPovPov;
  throw ConfigError("unknown scenario '" + std::string(text) +
                    "' (expected LG->LG,LG, POV->LG,LG or POV->POV,POV)");
}

Scenario Scenario::make(ScenarioKind kind, int l_p, PovGeometry pov, ModeNormalization norm) {
  Scenario s;
  s.pov = pov;
  s.pov_normalization = norm;
  switch (kind) {
    case ScenarioKind::LgLgLg:
      s.pump = ModeSpec::lg(l_p);
      break;
    case ScenarioKind::PovLgLg:
      s.pump = ModeSpec::pov(l_p, pov.r0, pov.w0);
      break;
    case ScenarioKind::PovPovPov:
      s.pump = ModeSpec::pov(l_p, pov.r0, pov.w0);
      s.signal_family = ModeFamily::POV;
      s.idler_family = ModeFamily::POV;
      break;
  }
  return s;
}

ModeSpec Scenario::signal_shape() const { return projection_shape(*this, signal_family); }
ModeSpec Scenario::idler_shape() const { return projection_shape(*this, idler_family); }

std::string Scenario::label() const {
  return std::string(to_string(pump.family)) + "->" + std::string(to_string(signal_family)) + "," +
         std::string(to_string(idler_family));
}

void Scenario::validate() const {
  pump.validate();
  for (ModeFamily f : {signal_family, idler_family}) {
    if (f != ModeFamily::LG && f != ModeFamily::POV) {
      throw ConfigError("projection bases must be LG or POV");
    }
  }
  if (!(lg_waist > 0.0)) throw ConfigError("scenario.lg_waist must be positive");
  signal_shape().validate();
  idler_shape().validate();
  if (l_window != 0 && l_window < std::abs(pump.l) + 4) {
    throw ConfigError("l_window must be at least |l_p| + 4 (got " + std::to_string(l_window) + ")");
  }
  if (l_window < 0) throw ConfigError("l_window must be nonnegative");
}

double SpectrumGrid::probability(int ls, int li) const {
  if (ls + li != l_p) return 0.0;
  if (l_s.empty() || ls < l_s.front() || ls > l_s.back()) return 0.0;
  return probs[static_cast<std::size_t>(ls - l_s.front())];
}

SpectrumGrid build_spectrum(const Scenario& scenario, const QuadratureConfig& quad) {
  ProfileCache cache(quad);
  return build_spectrum(scenario, cache);
}

SpectrumGrid build_spectrum(const Scenario& scenario, ProfileCache& cache) {
  scenario.validate();
  if (scenario.l_window > 0) {
    SpectrumGrid g = assemble(scenario, cache, scenario.l_window);
    if (g.edge_ratio > kWindowEdgeRatio) {
      throw WindowTooSmallError("l_window = " + std::to_string(g.window) + " for " +
                                    scenario.label() + " leaves edge probability ratio " +
                                    std::to_string(g.edge_ratio) + " > 1e-6",
                                g.window, g.edge_ratio);
    }
    return g;
  }
  for (int w = std::max(8, std::abs(scenario.pump.l) + 6);; w += 8) {
    SpectrumGrid g = assemble(scenario, cache, w);
    if (g.edge_ratio <= kWindowEdgeRatio) return g;
    if (w + 8 > kMaxAutoWindow) {
      throw WindowTooSmallError("no window up to " + std::to_string(kMaxAutoWindow) +
                                    " brings edge probabilities below 1e-6 for " + scenario.label(),
                                w, g.edge_ratio);
    }
  }
}

std::vector<SpectrumPeak> find_maxima(const SpectrumGrid& grid) {
  const std::vector<double>& p = grid.probs;
  std::vector<SpectrumPeak> peaks;
  if (p.empty()) return peaks;
  const double top = *std::max_element(p.begin(), p.end());
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!(p[k] > 0.0)) continue;
    const bool lo = k == 0 || p[k] >= p[k - 1];
    const bool hi = k + 1 == p.size() || p[k] >= p[k + 1];
    if (lo && hi) peaks.push_back({grid.l_s[k], grid.l_i(k), p[k], p[k] == top});
  }
  std::stable_sort(peaks.begin(), peaks.end(), [](const SpectrumPeak& a, const SpectrumPeak& b) {
    return a.probability > b.probability;
  });
  return peaks;
}

double participation_ratio(const std::vector<double>& probs) {
  double s = 0.0;
  for (double q : probs) s += q * q;
  return s > 0.0 ? 1.0 / s : 0.0;
}

double spectrum_width(const SpectrumGrid& grid) { return participation_ratio(grid.probs); }

}  // namespace oam
