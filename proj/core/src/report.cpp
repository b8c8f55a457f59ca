#include "oamspec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace oam {
namespace {

using nlohmann::ordered_json;

ordered_json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_to_12_digits(x);
}

ordered_json convention_json(const EntropyConvention& c) {
  return ordered_json{{"log_base", c.base.label()},
                      {"normalize_weights", c.normalize_weights},
                      {"pov_normalization", std::string(to_string(c.pov_normalization))},
                      {"pov_r0", num(c.pov.r0)},
                      {"pov_w0", num(c.pov.w0)}};
}

ordered_json table_json(const std::array<std::array<double, 3>, 5>& t) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < t.size(); ++r) {
    ordered_json row = ordered_json::array();
    for (double v : t[r]) row.push_back(num(v));
    rows.push_back(ordered_json{{"l_p", static_cast<int>(r)}, {"entropy", row}});
  }
  return rows;
}

ordered_json entry_json(const CalibrationEntry& e) {
  ordered_json cols = ordered_json::array();
  for (double d : e.column_deviation) cols.push_back(num(d));
  return ordered_json{{"convention", convention_json(e.convention)},
                      {"max_relative_deviation", num(e.max_relative_deviation)},
                      {"column_deviation", cols},
                      {"column_ordering", e.column_ordering},
                      {"rows_increasing", e.rows_increasing},
                      {"table", table_json(e.entropy)}};
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_to_12_digits(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

std::string spectrum_csv(const SpectrumGrid& grid, bool full_grid) {
  std::ostringstream out;
  out << "l_s,l_i,probability\n";
  if (full_grid) {
    for (int ls = -grid.window; ls <= grid.window; ++ls) {
      for (int li = -grid.window; li <= grid.window; ++li) {
        out << ls << ',' << li << ',' << format_number(grid.probability(ls, li)) << '\n';
      }
    }
  } else {
    for (std::size_t k = 0; k < grid.l_s.size(); ++k) {
      out << grid.l_s[k] << ',' << grid.l_i(k) << ',' << format_number(grid.probs[k]) << '\n';
    }
  }
  return out.str();
}

std::string spectrum_json(const SpectrumGrid& grid) {
  ordered_json entries = ordered_json::array();
  for (std::size_t k = 0; k < grid.l_s.size(); ++k) {
    entries.push_back(ordered_json{{"l_s", grid.l_s[k]},
                                   {"l_i", grid.l_i(k)},
                                   {"probability", num(grid.probs[k])},
                                   {"raw_weight", num(grid.raw_weights[k])},
                                   {"amplitude_re", num(grid.amplitudes[k].real())},
                                   {"amplitude_im", num(grid.amplitudes[k].imag())}});
  }
  ordered_json peaks = ordered_json::array();
  for (const SpectrumPeak& p : find_maxima(grid)) {
    peaks.push_back(ordered_json{{"l_s", p.l_s},
                                 {"l_i", p.l_i},
                                 {"probability", num(p.probability)},
                                 {"global", p.global}});
  }
  const Scenario& sc = grid.scenario;
  ordered_json j{{"scenario", sc.label()},
                 {"l_p", grid.l_p},
                 {"pump",
                  {{"family", std::string(to_string(sc.pump.family))},
                   {"l", sc.pump.l},
                   {"p", sc.pump.p},
                   {"w0", num(sc.pump.w0)},
                   {"r0", num(sc.pump.r0)}}},
                 {"lg_waist", num(sc.lg_waist)},
                 {"pov_r0", num(sc.pov.r0)},
                 {"pov_w0", num(sc.pov.w0)},
                 {"pov_normalization", std::string(to_string(sc.pov_normalization))},
                 {"l_window", grid.window},
                 {"edge_ratio", num(grid.edge_ratio)},
                 {"tail_mass", num(grid.tail_mass)},
                 {"monotone_tails", grid.monotone_tails},
                 {"participation_ratio", num(spectrum_width(grid))},
                 {"maxima", peaks},
                 {"entries", entries}};
  return j.dump(2) + "\n";
}

std::string entropy_reports_json(const std::vector<EntropyReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const EntropyReport& rep : reports) {
    ordered_json cols = ordered_json::array();
    for (ScenarioKind k : rep.scenarios) cols.push_back(std::string(to_string(k)));
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < rep.l_p_values.size(); ++r) {
      ordered_json s = ordered_json::array(), w = ordered_json::array(),
                   rk = ordered_json::array(), win = ordered_json::array();
      for (std::size_t c = 0; c < rep.scenarios.size(); ++c) {
        s.push_back(num(rep.entropy[r][c]));
        w.push_back(num(rep.width[r][c]));
        rk.push_back(rep.rank[r][c]);
        win.push_back(rep.window[r][c]);
      }
      rows.push_back(ordered_json{{"l_p", rep.l_p_values[r]},
                                  {"entropy", s},
                                  {"schmidt_rank", rk},
                                  {"participation_ratio", w},
                                  {"l_window", win}});
    }
    arr.push_back(ordered_json{
        {"convention", convention_json(rep.convention)}, {"columns", cols}, {"rows", rows}});
  }
  return ordered_json{{"entropy_tables", arr}}.dump(2) + "\n";
}

std::string entropy_reports_text(const std::vector<EntropyReport>& reports) {
  std::ostringstream out;
  constexpr std::size_t kCol = 16;
  for (const EntropyReport& rep : reports) {
    out << "# " << rep.convention.label() << '\n';
    out << pad("l_p", 4);
    for (ScenarioKind k : rep.scenarios) out << pad(std::string(to_string(k)), kCol);
    out << '\n';
    for (std::size_t r = 0; r < rep.l_p_values.size(); ++r) {
      out << pad(std::to_string(rep.l_p_values[r]), 4);
      for (double v : rep.entropy[r]) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", v);
        out << pad(buf, kCol);
      }
      out << '\n';
    }
    out << '\n';
  }
  return out.str();
}

std::string pov_validation_csv(const std::vector<PovOracleProfile>& profiles) {
  std::ostringstream out;
  out << "l,r,oracle_magnitude,closed_form_magnitude,relative_difference\n";
  for (const PovOracleProfile& p : profiles) {
    const double peak = *std::max_element(p.closed_magnitude.begin(), p.closed_magnitude.end());
    for (std::size_t j = 0; j < p.radius.size(); ++j) {
      const double diff = std::abs(p.oracle_magnitude[j] - p.closed_magnitude[j]) / peak;
      out << p.l << ',' << format_number(p.radius[j]) << ',' << format_number(p.oracle_magnitude[j])
          << ',' << format_number(p.closed_magnitude[j]) << ',' << format_number(diff) << '\n';
    }
  }
  return out.str();
}

std::string pov_validation_json(const std::vector<PovOracleProfile>& profiles, double threshold) {
  ordered_json arr = ordered_json::array();
  bool all_ok = true;
  for (const PovOracleProfile& p : profiles) {
    const bool ok = p.relative_l2_error < threshold;
    all_ok = all_ok && ok;
    arr.push_back(ordered_json{{"l", p.l},
                               {"points", p.radius.size()},
                               {"relative_l2_error", num(p.relative_l2_error)},
                               {"phase_offset", num(p.phase_offset)},
                               {"pass", ok}});
  }
  return ordered_json{{"threshold", num(threshold)}, {"pass", all_ok}, {"profiles", arr}}.dump(2) +
         "\n";
}

std::string calibration_json(const CalibrationReport& report) {
  ordered_json per = ordered_json::array();
  for (const auto& e : report.per_convention) per.push_back(entry_json(e));
  return ordered_json{{"reference", table_json(reference_entropies())},
                      {"geometries_scanned", report.geometries_scanned},
                      {"geometries_skipped", report.geometries_skipped},
                      {"best", entry_json(report.best)},
                      {"per_convention", per}}
             .dump(2) +
         "\n";
}

std::string calibration_text(const CalibrationReport& report) {
  std::ostringstream out;
  out << "geometries scanned: " << report.geometries_scanned
      << " (skipped " << report.geometries_skipped << ")\n";
  out << "best convention per (log base, weights, POV normalization):\n";
  for (const auto& e : report.per_convention) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "  %-60s max rel dev %.4g  [LG %.3g, POV->LG %.3g, POV->POV %.3g]%s\n",
                  e.convention.label().c_str(), e.max_relative_deviation, e.column_deviation[0],
                  e.column_deviation[1], e.column_deviation[2],
                  e.column_ordering && e.rows_increasing ? "" : "  (orderings violated)");
    out << buf;
  }
  out << "overall best: " << report.best.convention.label() << "  max rel dev "
      << format_number(report.best.max_relative_deviation) << '\n';
  return out.str();
}

}  // namespace oam
