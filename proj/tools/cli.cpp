#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oamspec/calibration.hpp"
#include "oamspec/errors.hpp"
#include "oamspec/lens_oracle.hpp"
#include "oamspec/report.hpp"

namespace oam::cli {
namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

template <class T>
T field(const ordered_json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("config field '") + key + "' has the wrong type");
  }
}

std::string output_format_name(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

OutputFormat parse_output_format(std::string_view t) {
  if (t == "csv") return OutputFormat::Csv;
  if (t == "json") return OutputFormat::Json;
  throw ConfigError("format must be csv or json (got '" + std::string(t) + "')");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int to_int(const std::string& s, const std::string& flag) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ConfigError("--" + flag + ": expected an integer, got '" + s + "'");
  return v;
}

double to_double(const std::string& s, const std::string& flag) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ConfigError("--" + flag + ": expected a number, got '" + s + "'");
  return v;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file " + path.string());
  out << content;
  if (!out) throw ConfigError("failed writing output file " + path.string());
}

fs::path output_directory(const RunConfig& cfg) {
  if (!cfg.output_dir.empty()) return cfg.output_dir;
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
  return ".";
}

std::string stem_or(const RunConfig& cfg, const std::string& fallback) {
  return cfg.output_name.empty() ? fallback : cfg.output_name;
}

std::string scenario_slug(const Scenario& s) {
  return std::string(to_string(s.pump.family)) + "-" + std::string(to_string(s.signal_family)) +
         "-" + std::string(to_string(s.idler_family));
}

std::string entropy_csv(const std::vector<EntropyReport>& reports) {
  std::ostringstream out;
  out << "convention,l_p,scenario,entropy,schmidt_rank,participation_ratio\n";
  for (const EntropyReport& rep : reports) {
    for (std::size_t r = 0; r < rep.l_p_values.size(); ++r) {
      for (std::size_t c = 0; c < rep.scenarios.size(); ++c) {
        out << '"' << rep.convention.label() << "\"," << rep.l_p_values[r] << ','
            << to_string(rep.scenarios[c]) << ',' << format_number(rep.entropy[r][c]) << ','
            << rep.rank[r][c] << ',' << format_number(rep.width[r][c]) << '\n';
      }
    }
  }
  return out.str();
}

int run_spectrum(const RunConfig& cfg, const fs::path& dir, std::ostream& log) {
  const Scenario sc = cfg.scenario();
  const SpectrumGrid grid = build_spectrum(sc, cfg.quad);
  const std::string stem =
      stem_or(cfg, "spectrum_" + scenario_slug(sc) + "_lp" + std::to_string(cfg.l_p));
  const fs::path path = dir / (stem + (cfg.format == OutputFormat::Csv ? ".csv" : ".json"));
  write_file(path, cfg.format == OutputFormat::Csv ? spectrum_csv(grid, cfg.full_grid)
                                                   : spectrum_json(grid));
  log << "scenario " << sc.label() << " l_p=" << grid.l_p << " window=" << grid.window
      << " participation_ratio=" << format_number(spectrum_width(grid)) << '\n';
  for (const SpectrumPeak& p : find_maxima(grid)) {
    log << (p.global ? "  global maximum " : "  secondary maximum ") << '(' << p.l_s << ','
        << p.l_i << ") p=" << format_number(p.probability) << '\n';
  }
  if (cfg.query) {
    log << "query l_s=" << cfg.query->first << " l_i=" << cfg.query->second
        << " probability=" << format_number(grid.probability(cfg.query->first, cfg.query->second))
        << '\n';
  }
  log << "wrote " << path.string() << '\n';
  return kExitOk;
}

int run_entropy_table(const RunConfig& cfg, const fs::path& dir, std::ostream& log) {
  std::vector<EntropyConvention> conventions;
  if (cfg.all_conventions) {
    for (ModeNormalization pn : {ModeNormalization::Raw, ModeNormalization::UnitL2}) {
      for (LogBase b : {LogBase::e(), LogBase::two()}) {
        for (bool nw : {true, false}) conventions.push_back({b, nw, pn, cfg.pov});
      }
    }
  } else {
    conventions.push_back({cfg.log_base, cfg.normalize_weights, cfg.pov_normalization, cfg.pov});
  }
  ProfileCache cache(cfg.quad);
  std::vector<EntropyReport> reports;
  for (const EntropyConvention& c : conventions) {
    reports.push_back(entropy_table(cfg.l_p_values, cfg.scenarios, cache, c));
  }
  const std::string stem = stem_or(cfg, "entropy_table");
  const fs::path data = dir / (stem + (cfg.format == OutputFormat::Csv ? ".csv" : ".json"));
  const fs::path text = dir / (stem + ".txt");
  write_file(data, cfg.format == OutputFormat::Csv ? entropy_csv(reports)
                                                   : entropy_reports_json(reports));
  const std::string table = entropy_reports_text(reports);
  write_file(text, table);
  log << table << "wrote " << data.string() << '\n' << "wrote " << text.string() << '\n';
  return kExitOk;
}

int run_validate_pov(const RunConfig& cfg, const fs::path& dir, std::ostream& log,
                     std::ostream& err) {
  const LensGeometry lens{cfg.focal_length, cfg.wavevector};
  std::vector<PovOracleProfile> profiles;
  bool ok = true;
  for (int l : cfg.validate_l) {
    profiles.push_back(validate_pov(l, cfg.pov.r0, cfg.pov.w0, lens, cfg.validate_points));
    const PovOracleProfile& p = profiles.back();
    log << "l=" << l << " relative L2 error " << format_number(p.relative_l2_error) << '\n';
    ok = ok && p.relative_l2_error < cfg.validate_threshold;
  }
  const std::string stem = stem_or(cfg, "pov_validation");
  const fs::path csv = dir / (stem + ".csv");
  const fs::path json = dir / (stem + ".json");
  write_file(csv, pov_validation_csv(profiles));
  write_file(json, pov_validation_json(profiles, cfg.validate_threshold));
  log << "wrote " << csv.string() << '\n' << "wrote " << json.string() << '\n';
  if (!ok) {
    err << "error: lens transform disagrees with the closed-form POV beyond "
        << format_number(cfg.validate_threshold) << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

int run_calibrate(const RunConfig& cfg, const fs::path& dir, std::ostream& log) {
  CalibrationGrid grid;
  grid.r0_values = cfg.calibrate_r0;
  grid.w0_values = cfg.calibrate_w0;
  const CalibrationReport rep = calibrate(grid, cfg.quad);
  const std::string stem = stem_or(cfg, "calibration");
  const fs::path json = dir / (stem + ".json");
  const fs::path text = dir / (stem + ".txt");
  write_file(json, calibration_json(rep));
  const std::string summary = calibration_text(rep);
  write_file(text, summary);
  log << summary << "wrote " << json.string() << '\n' << "wrote " << text.string() << '\n';
  return kExitOk;
}

// One command-line flag: its config key and how to store the raw string.
struct FlagBinding {
  CLI::Option* option;
  std::string value;
  std::function<void(ordered_json&, const std::string&)> apply;
};

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Spectrum: return "spectrum";
    case Command::EntropyTable: return "entropy-table";
    case Command::ValidatePov: return "validate-pov";
    case Command::Calibrate: return "calibrate";
  }
  return "?";
}

Command parse_command(std::string_view text) {
  if (text == "spectrum") return Command::Spectrum;
  if (text == "entropy-table") return Command::EntropyTable;
  if (text == "validate-pov") return Command::ValidatePov;
  if (text == "calibrate") return Command::Calibrate;
  throw ConfigError("unknown command '" + std::string(text) + "'");
}

void RunConfig::validate() const {
  quad.validate();
  if (pump_family == ModeFamily::BesselGauss) throw ConfigError("pump must be LG or POV");
  if (pump_p < 0) throw ConfigError("pump_p must be nonnegative");
  if (pump_family != ModeFamily::LG && pump_p != 0) throw ConfigError("pump_p must be 0 for POV pumps");
  if (!(pump_w0 > 0.0)) throw ConfigError("pump_w0 must be positive");
  if (!(pov.r0 > 0.0)) throw ConfigError("pov_r0 must be positive");
  if (!(pov.w0 > 0.0)) throw ConfigError("pov_w0 must be positive");
  if (l_window < 0) throw ConfigError("l_window must be nonnegative");
  if (l_window != 0 && l_window < std::abs(l_p) + 4) {
    throw ConfigError("l_window must be 0 (automatic) or at least |l_p| + 4");
  }
  if (l_p_values.empty()) throw ConfigError("l_p_values must not be empty");
  if (scenarios.empty()) throw ConfigError("scenarios must not be empty");
  if (validate_l.empty()) throw ConfigError("validate_l must not be empty");
  if (validate_points < 2) throw ConfigError("validate_points must be at least 2");
  if (!(focal_length > 0.0)) throw ConfigError("focal_length must be positive");
  if (!(wavevector > 0.0)) throw ConfigError("wavevector must be positive");
  if (!(validate_threshold > 0.0)) throw ConfigError("validate_threshold must be positive");
  if (calibrate_r0.empty() || calibrate_w0.empty()) throw ConfigError("calibration grids must not be empty");
  for (double v : calibrate_r0) if (!(v > 0.0)) throw ConfigError("calibrate_r0 entries must be positive");
  for (double v : calibrate_w0) if (!(v > 0.0)) throw ConfigError("calibrate_w0 entries must be positive");
  (void)log_base.ln_base();
  scenario().validate();
}

Scenario RunConfig::scenario() const {
  Scenario s;
  s.pump = pump_family == ModeFamily::POV ? ModeSpec::pov(l_p, pov.r0, pov.w0)
                                          : ModeSpec::lg(l_p, pump_p, pump_w0);
  s.signal_family = signal_family;
  s.idler_family = idler_family;
  s.l_window = l_window;
  s.lg_waist = lg_waist;
  s.pov = pov;
  s.pov_normalization = pov_normalization;
  return s;
}

std::string to_json(const RunConfig& c) {
  ordered_json scen = ordered_json::array();
  for (ScenarioKind k : c.scenarios) scen.push_back(std::string(oam::to_string(k)));
  ordered_json j{
      {"command", std::string(to_string(c.command))},
      {"pump_family", std::string(oam::to_string(c.pump_family))},
      {"l_p", c.l_p},
      {"pump_p", c.pump_p},
      {"pump_w0", c.pump_w0},
      {"signal_family", std::string(oam::to_string(c.signal_family))},
      {"idler_family", std::string(oam::to_string(c.idler_family))},
      {"l_window", c.l_window},
      {"lg_waist", c.lg_waist},
      {"pov_r0", c.pov.r0},
      {"pov_w0", c.pov.w0},
      {"pov_normalization", std::string(oam::to_string(c.pov_normalization))},
      {"quadrature",
       {{"r_max", c.quad.r_max},
        {"radial_nodes", c.quad.radial_nodes},
        {"panels", c.quad.panels},
        {"azimuthal_nodes", c.quad.azimuthal_nodes},
        {"rel_tol", c.quad.rel_tol}}},
      {"log_base", c.log_base.label()},
      {"normalize_weights", c.normalize_weights},
      {"conventions", c.all_conventions ? "all" : "single"},
      {"l_p_values", c.l_p_values},
      {"scenarios", scen},
      {"validate_l", c.validate_l},
      {"validate_points", c.validate_points},
      {"focal_length", c.focal_length},
      {"wavevector", c.wavevector},
      {"validate_threshold", c.validate_threshold},
      {"calibrate_r0", c.calibrate_r0},
      {"calibrate_w0", c.calibrate_w0},
      {"query", c.query ? ordered_json::array({c.query->first, c.query->second}) : ordered_json()},
      {"full_grid", c.full_grid},
      {"output_dir", c.output_dir},
      {"output_name", c.output_name},
      {"format", output_format_name(c.format)},
  };
  if (c.log_base.kind == LogBase::Kind::Dim) {
    // full precision so the dimension survives a round trip
    std::ostringstream d;
    d.precision(17);
    d << c.log_base.d;
    j["log_base"] = d.str();
  }
  return j.dump(2) + "\n";
}

RunConfig config_from_json(std::string_view text, const RunConfig& base) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  RunConfig c = base;
  if (j.contains("command")) c.command = parse_command(field<std::string>(j, "command", ""));
  if (j.contains("pump_family")) c.pump_family = parse_mode_family(field<std::string>(j, "pump_family", ""));
  c.l_p = field(j, "l_p", c.l_p);
  c.pump_p = field(j, "pump_p", c.pump_p);
  c.pump_w0 = field(j, "pump_w0", c.pump_w0);
  if (j.contains("signal_family")) c.signal_family = parse_mode_family(field<std::string>(j, "signal_family", ""));
  if (j.contains("idler_family")) c.idler_family = parse_mode_family(field<std::string>(j, "idler_family", ""));
  c.l_window = field(j, "l_window", c.l_window);
  c.lg_waist = field(j, "lg_waist", c.lg_waist);
  c.pov.r0 = field(j, "pov_r0", c.pov.r0);
  c.pov.w0 = field(j, "pov_w0", c.pov.w0);
  if (j.contains("pov_normalization")) {
    c.pov_normalization = parse_mode_normalization(field<std::string>(j, "pov_normalization", ""));
  }
  if (j.contains("quadrature")) {
    const ordered_json& q = j.at("quadrature");
    if (!q.is_object()) throw ConfigError("config field 'quadrature' must be an object");
    c.quad.r_max = field(q, "r_max", c.quad.r_max);
    c.quad.radial_nodes = field(q, "radial_nodes", c.quad.radial_nodes);
    c.quad.panels = field(q, "panels", c.quad.panels);
    c.quad.azimuthal_nodes = field(q, "azimuthal_nodes", c.quad.azimuthal_nodes);
    c.quad.rel_tol = field(q, "rel_tol", c.quad.rel_tol);
  }
  if (j.contains("log_base")) c.log_base = parse_log_base(field<std::string>(j, "log_base", ""));
  c.normalize_weights = field(j, "normalize_weights", c.normalize_weights);
  if (j.contains("conventions")) {
    const std::string v = field<std::string>(j, "conventions", "");
    if (v != "all" && v != "single") throw ConfigError("conventions must be 'all' or 'single'");
    c.all_conventions = v == "all";
  }
  c.l_p_values = field(j, "l_p_values", c.l_p_values);
  if (j.contains("scenarios")) {
    c.scenarios.clear();
    for (const std::string& s : field<std::vector<std::string>>(j, "scenarios", {})) {
      c.scenarios.push_back(parse_scenario_kind(s));
    }
  }
  c.validate_l = field(j, "validate_l", c.validate_l);
  c.validate_points = field(j, "validate_points", c.validate_points);
  c.focal_length = field(j, "focal_length", c.focal_length);
  c.wavevector = field(j, "wavevector", c.wavevector);
  c.validate_threshold = field(j, "validate_threshold", c.validate_threshold);
  c.calibrate_r0 = field(j, "calibrate_r0", c.calibrate_r0);
  c.calibrate_w0 = field(j, "calibrate_w0", c.calibrate_w0);
  if (j.contains("query")) {
    const ordered_json& q = j.at("query");
    if (q.is_null()) {
      c.query.reset();
    } else {
      const auto v = field<std::vector<int>>(j, "query", {});
      if (v.size() != 2) throw ConfigError("config field 'query' must be [l_s, l_i] or null");
      c.query = std::make_pair(v[0], v[1]);
    }
  }
  c.full_grid = field(j, "full_grid", c.full_grid);
  c.output_dir = field(j, "output_dir", c.output_dir);
  c.output_name = field(j, "output_name", c.output_name);
  if (j.contains("format")) c.format = parse_output_format(field<std::string>(j, "format", ""));
  return c;
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"OAM spectra and entanglement of down-converted photon pairs", "oamspec"};
  app.require_subcommand(1);
  std::vector<CLI::App*> commands;
  for (Command c : {Command::Spectrum, Command::EntropyTable, Command::ValidatePov, Command::Calibrate}) {
    static const char* const help[] = {
        "joint OAM spectrum of one scenario (CSV or JSON)",
        "von Neumann entropy table across scenarios and pump OAM",
        "lens-transform oracle against the closed-form POV mode",
        "scan conventions and POV geometry against the reference entropy table"};
    commands.push_back(app.add_subcommand(std::string(to_string(c)), help[static_cast<int>(c)])
                           ->fallthrough());
  }

  std::string config_path;
  bool print_config = false;
  app.add_option("--config", config_path, "JSON config file; flags override its values");
  app.add_flag("--print-config", print_config, "print the effective config as JSON and exit");

  std::vector<FlagBinding> bindings;
  bindings.reserve(40);
  auto bind = [&](const std::string& flags, const std::string& help,
                  std::function<void(ordered_json&, const std::string&)> apply) {
    bindings.push_back({nullptr, {}, std::move(apply)});
    bindings.back().option = app.add_option(flags, bindings.back().value, help);
  };
  auto as_string = [](const char* key) {
    return [key](ordered_json& j, const std::string& v) { j[key] = v; };
  };
  auto as_int = [](const char* key, const char* flag) {
    return [key, flag](ordered_json& j, const std::string& v) { j[key] = to_int(v, flag); };
  };
  auto as_double = [](const char* key, const char* flag) {
    return [key, flag](ordered_json& j, const std::string& v) { j[key] = to_double(v, flag); };
  };
  auto as_quad_int = [](const char* key, const char* flag) {
    return [key, flag](ordered_json& j, const std::string& v) { j["quadrature"][key] = to_int(v, flag); };
  };
  auto as_int_list = [](const char* key, const char* flag) {
    return [key, flag](ordered_json& j, const std::string& v) {
      std::vector<int> xs;
      for (const auto& s : split_list(v)) xs.push_back(to_int(s, flag));
      j[key] = xs;
    };
  };
  auto as_double_list = [](const char* key, const char* flag) {
    return [key, flag](ordered_json& j, const std::string& v) {
      std::vector<double> xs;
      for (const auto& s : split_list(v)) xs.push_back(to_double(s, flag));
      j[key] = xs;
    };
  };

  bind("--pump", "pump family: LG or POV", as_string("pump_family"));
  bind("--lp", "pump OAM l_p", as_int("l_p", "lp"));
  bind("--pump-p", "LG pump radial index", as_int("pump_p", "pump-p"));
  bind("--pump-w0", "LG pump waist", as_double("pump_w0", "pump-w0"));
  bind("--project", "projection family for signal and idler: LG or POV",
       [](ordered_json& j, const std::string& v) {
         j["signal_family"] = v;
         j["idler_family"] = v;
       });
  bind("--signal", "signal projection family", as_string("signal_family"));
  bind("--idler", "idler projection family", as_string("idler_family"));
  bind("--window", "half-width W of the l window (0 = automatic)", as_int("l_window", "window"));
  bind("--lg-waist", "waist of LG projection modes", as_double("lg_waist", "lg-waist"));
  bind("--r0", "POV ring radius", as_double("pov_r0", "r0"));
  bind("--w0", "POV ring width", as_double("pov_w0", "w0"));
  bind("--pov-norm", "POV mode scaling: raw or unit", as_string("pov_normalization"));
  bind("--r-max", "radial truncation", [](ordered_json& j, const std::string& v) {
    j["quadrature"]["r_max"] = to_double(v, "r-max");
  });
  bind("--radial-nodes", "Gauss-Legendre nodes per panel", as_quad_int("radial_nodes", "radial-nodes"));
  bind("--panels", "radial panels", as_quad_int("panels", "panels"));
  bind("--azimuthal-nodes", "trapezoid nodes in phi", as_quad_int("azimuthal_nodes", "azimuthal-nodes"));
  bind("--rel-tol", "node-doubling tolerance", [](ordered_json& j, const std::string& v) {
    j["quadrature"]["rel_tol"] = to_double(v, "rel-tol");
  });
  bind("--log-base", "entropy log base: e, 2 or a dimension d", as_string("log_base"));
  bind("--weights", "Schmidt weights: normalized or raw", [](ordered_json& j, const std::string& v) {
    if (v != "normalized" && v != "raw") throw ConfigError("--weights must be normalized or raw");
    j["normalize_weights"] = v == "normalized";
  });
  bind("--conventions", "entropy conventions: single or all", as_string("conventions"));
  bind("--lp-values", "comma-separated pump OAM rows", as_int_list("l_p_values", "lp-values"));
  bind("--scenarios", "comma-separated scenario columns",
       [](ordered_json& j, const std::string& v) {
         std::vector<std::string> xs;
         // scenario names contain commas; split on ';' instead
         std::istringstream in(v);
         std::string item;
         while (std::getline(in, item, ';')) if (!item.empty()) xs.push_back(item);
         j["scenarios"] = xs;
       });
  bind("--validate-l", "comma-separated orders for validate-pov", as_int_list("validate_l", "validate-l"));
  bind("--points", "radial samples for validate-pov", as_int("validate_points", "points"));
  bind("--focal-length", "lens focal length", as_double("focal_length", "focal-length"));
  bind("--wavevector", "total wavevector k", as_double("wavevector", "wavevector"));
  bind("--threshold", "validate-pov relative L2 threshold", as_double("validate_threshold", "threshold"));
  bind("--r0-grid", "calibration r0 values", as_double_list("calibrate_r0", "r0-grid"));
  bind("--w0-grid", "calibration w0 values", as_double_list("calibrate_w0", "w0-grid"));
  bind("--query", "report the probability of one pair: l_s,l_i",
       [](ordered_json& j, const std::string& v) {
         const auto parts = split_list(v);
         if (parts.size() != 2) throw ConfigError("--query expects l_s,l_i");
         j["query"] = {to_int(parts[0], "query"), to_int(parts[1], "query")};
       });
  bind("--out-dir", "output directory (default $OAMSPEC_OUTPUT_DIR or .)", as_string("output_dir"));
  bind("--output", "output file stem", as_string("output_name"));
  bind("--format", "spectrum/entropy data format: csv or json", as_string("format"));
  bool full_grid = false;
  CLI::Option* full_grid_opt = app.add_flag("--full-grid", full_grid, "write every (l_s, l_i) pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  RunConfig base;
  if (!config_path.empty()) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    base = config_from_json(buf.str());
  }
  ordered_json overrides = ordered_json::object();
  for (CLI::App* sub : commands) {
    if (sub->parsed()) overrides["command"] = sub->get_name();
  }
  for (const FlagBinding& b : bindings) {
    if (b.option->count() > 0) b.apply(overrides, b.value);
  }
  if (full_grid_opt->count() > 0) overrides["full_grid"] = full_grid;
  RunConfig cfg = config_from_json(overrides.dump(), base);
  cfg.validate();
  if (print_config) {
    out << to_json(cfg);
    return std::nullopt;
  }
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  try {
    cfg.validate();
    const fs::path dir = output_directory(cfg);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + dir.string());
    switch (cfg.command) {
      case Command::Spectrum: return run_spectrum(cfg, dir, log);
      case Command::EntropyTable: return run_entropy_table(cfg, dir, log);
      case Command::ValidatePov: return run_validate_pov(cfg, dir, log, err);
      case Command::Calibrate: return run_calibrate(cfg, dir, log);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const WindowTooSmallError& e) {
    err << "window too small: " << e.what() << '\n';
    return kExitWindow;
  } catch (const ConvergenceError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const DegenerateError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::overflow_error& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitConfig;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_command_line(argc, argv, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (!cfg) return kExitOk;
  return run(*cfg, out, err);
}

}  // namespace oam::cli
