#include "oamspec/entanglement.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "oamspec/errors.hpp"

namespace oam {

int SchmidtDecomposition::rank() const {
  int n = 0;
  for (double w : weights) n += w > 1e-14 ? 1 : 0;
  return n;
}

SchmidtDecomposition schmidt_from_spectrum(const SpectrumGrid& grid, bool normalized) {
  if (grid.l_s.empty()) throw DegenerateError("schmidt_from_spectrum: empty anti-diagonal");
  SchmidtDecomposition d;
  d.l_p = grid.l_p;
  d.l_s = grid.l_s;
  d.weights = normalized ? grid.probs : grid.raw_weights;
  d.normalized = normalized;
  return d;
}

double LogBase::ln_base() const {
  switch (kind) {
    case Kind::E: return 1.0;
    case Kind::Two: return std::numbers::ln2;
    case Kind::Dim:
      if (!(d > 1.0)) throw ConfigError("log base dimension d must exceed 1");
      return std::log(d);
  }
  return 1.0;
}

std::string LogBase::label() const {
  switch (kind) {
    case Kind::E: return "e";
    case Kind::Two: return "2";
    case Kind::Dim: {
      char buf[48];
      std::snprintf(buf, sizeof buf, "d=%.12g", d);
      return buf;
    }
  }
  return "?";
}

LogBase parse_log_base(std::string_view text) {
  if (text == "e" || text == "ln") return LogBase::e();
  if (text == "2" || text == "two") return LogBase::two();
  std::string t(text);
  if (t.rfind("d=", 0) == 0) t = t.substr(2);
  char* end = nullptr;
  const double d = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !(d > 1.0)) {
    throw ConfigError("log base must be e, 2 or a dimension d > 1 (got '" + std::string(text) + "')");
  }
  return LogBase::dim(d);
}

double von_neumann_entropy(const SchmidtDecomposition& decomp, LogBase base, bool normalize) {
  double total = 1.0;
  if (normalize) {
    total = 0.0;
    for (double w : decomp.weights) total += w;
    if (!(total > 0.0)) throw DegenerateError("von_neumann_entropy: zero total weight");
  }
  double s = 0.0;
  for (double w : decomp.weights) {
    if (w < 0.0) throw ConfigError("von_neumann_entropy: negative Schmidt weight");
    const double lam = w / total;
    if (lam > 0.0) s -= lam * std::log(lam);
  }
  return s / base.ln_base();
}

std::string EntropyConvention::label() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "log=%s weights=%s pov=%s r0=%.12g w0=%.12g",
                base.label().c_str(), normalize_weights ? "normalized" : "raw",
                std::string(to_string(pov_normalization)).c_str(), pov.r0, pov.w0);
  return buf;
}

std::vector<int> default_table_rows() { return {0, 1, 2, 3, 4}; }

EntropyReport entropy_table(const std::vector<int>& l_p_values,
                            const std::vector<ScenarioKind>& scenarios,
                            const QuadratureConfig& quad, const EntropyConvention& convention) {
  ProfileCache cache(quad);
  return entropy_table(l_p_values, scenarios, cache, convention);
}

EntropyReport entropy_table(const std::vector<int>& l_p_values,
                            const std::vector<ScenarioKind>& scenarios, ProfileCache& cache,
                            const EntropyConvention& convention) {
  EntropyReport rep;
  rep.l_p_values = l_p_values;
  rep.scenarios = scenarios;
  rep.convention = convention;
  for (int l_p : l_p_values) {
    std::vector<double> s_row, w_row;
    std::vector<int> r_row, win_row;
    for (ScenarioKind kind : scenarios) {
      const Scenario sc = Scenario::make(kind, l_p, convention.pov, convention.pov_normalization);
      const SpectrumGrid grid = build_spectrum(sc, cache);
      const SchmidtDecomposition d = schmidt_from_spectrum(grid, convention.normalize_weights);
      s_row.push_back(von_neumann_entropy(d, convention.base, convention.normalize_weights));
      r_row.push_back(d.rank());
      w_row.push_back(spectrum_width(grid));
      win_row.push_back(grid.window);
    }
    rep.entropy.push_back(std::move(s_row));
    rep.rank.push_back(std::move(r_row));
    rep.width.push_back(std::move(w_row));
    rep.window.push_back(std::move(win_row));
  }
  return rep;
}

}  // namespace oam
