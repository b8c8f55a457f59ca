#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "oamspec/errors.hpp"

namespace {

namespace fs = std::filesystem;
using oam::cli::RunConfig;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "oamspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = oam::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("oamspec_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST(Config, JsonRoundTrip) {
  RunConfig c;
  c.command = oam::cli::Command::EntropyTable;
  c.pump_family = oam::ModeFamily::POV;
  c.l_p = 3;
  c.pov = {0.3, 0.45};
  c.log_base = oam::LogBase::dim(7.5);
  c.normalize_weights = false;
  c.scenarios = {oam::ScenarioKind::PovPovPov};
  c.query = std::make_pair(2, 1);
  c.quad.rel_tol = 1e-9;
  c.format = oam::cli::OutputFormat::Json;
  EXPECT_EQ(oam::cli::config_from_json(oam::cli::to_json(c)), c);
  EXPECT_EQ(oam::cli::config_from_json(oam::cli::to_json(RunConfig{})), RunConfig{});
}

TEST(Config, MissingFieldsKeepBase) {
  RunConfig base;
  base.l_p = 4;
  const RunConfig c = oam::cli::config_from_json(R"({"pov_r0": 0.5})", base);
  EXPECT_EQ(c.l_p, 4);
  EXPECT_EQ(c.pov.r0, 0.5);
}

TEST(Config, WrongTypeIsConfigError) {
  EXPECT_THROW(oam::cli::config_from_json(R"({"l_p": "two"})"), oam::ConfigError);
  EXPECT_THROW(oam::cli::config_from_json("[1,2]"), oam::ConfigError);
  EXPECT_THROW(oam::cli::config_from_json("{"), oam::ConfigError);
}

TEST(Config, ValidationMessages) {
  RunConfig c;
  c.pov.w0 = -1.0;
  try {
    c.validate();
    FAIL();
  } catch (const oam::ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("pov_w0"), std::string::npos);
  }
}

TEST_F(CliTest, FlagsOverrideConfigFile) {
  const fs::path cfg = dir_ / "run.json";
  std::ofstream(cfg) << R"({"command": "spectrum", "l_p": 2, "pov_r0": 0.4})";
  const auto r = run_cli({"spectrum", "--config", cfg.string(), "--lp", "3", "--print-config"});
  ASSERT_EQ(r.code, 0) << r.err;
  const RunConfig c = oam::cli::config_from_json(r.out);
  EXPECT_EQ(c.l_p, 3);
  EXPECT_EQ(c.pov.r0, 0.4);
}

TEST_F(CliTest, FirstOrderSpectrumCsv) {
  const auto r = run_cli({"spectrum", "--pump", "LG", "--lp", "1", "--project", "LG", "--out-dir", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(slurp(dir_ / "spectrum_LG-LG-LG_lp1.csv"));
  std::string line;
  std::getline(in, line);
  double best = -1.0;
  std::vector<std::pair<int, int>> at_best;
  while (std::getline(in, line)) {
    int ls = 0;
    int li = 0;
    double p = 0.0;
    ASSERT_EQ(std::sscanf(line.c_str(), "%d,%d,%lf", &ls, &li, &p), 3);
    if (p > best) {
      best = p;
      at_best.clear();
    }
    if (p == best) at_best.emplace_back(ls, li);
  }
  EXPECT_EQ(at_best, (std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}));
}

TEST_F(CliTest, NonConservingQueryIsZero) {
  const auto r = run_cli({"spectrum", "--lp", "1", "--query", "1,1", "--out-dir", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("query l_s=1 l_i=1 probability=0\n"), std::string::npos);
}

TEST_F(CliTest, EntropyTableAllConventions) {
  const auto r = run_cli({"entropy-table", "--conventions", "all", "--format", "json", "--out-dir", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string json = slurp(dir_ / "entropy_table.json");
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = json.find("\"convention\"", pos)) != std::string::npos; ++pos) ++count;
  EXPECT_EQ(count, 8u);
  EXPECT_TRUE(fs::exists(dir_ / "entropy_table.txt"));
}

TEST_F(CliTest, OutputDirFromEnvironment) {
  ::setenv(oam::cli::kOutputDirEnv, dir_.string().c_str(), 1);
  const auto r = run_cli({"spectrum", "--lp", "0", "--output", "env_probe"});
  ::unsetenv(oam::cli::kOutputDirEnv);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "env_probe.csv"));
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({"spectrum", "--lp", "x"}).code, oam::cli::kExitConfig);
  EXPECT_EQ(run_cli({"spectrum", "--w0", "-1"}).code, oam::cli::kExitConfig);
  EXPECT_EQ(run_cli({"bogus"}).code, oam::cli::kExitConfig);
  EXPECT_EQ(run_cli({"spectrum", "--lp", "2", "--window", "6", "--out-dir", dir_.string()}).code,
            oam::cli::kExitWindow);
  EXPECT_EQ(run_cli({"spectrum", "--r-max", "1.5", "--lp", "4", "--out-dir", dir_.string()}).code,
            oam::cli::kExitNumeric);
  EXPECT_EQ(run_cli({"validate-pov", "--validate-l", "0", "--points", "5", "--threshold", "1e-30",
                     "--out-dir", dir_.string()})
                .code,
            oam::cli::kExitNumeric);
}

TEST_F(CliTest, HelpExitsCleanly) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("entropy-table"), std::string::npos);
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  const fs::path a = dir_ / "a";
  const fs::path b = dir_ / "b";
  for (const fs::path& d : {a, b}) {
    ASSERT_EQ(run_cli({"spectrum", "--pump", "POV", "--project", "POV", "--lp", "3", "--format", "json",
                       "--out-dir", d.string()})
                  .code,
              0);
  }
  EXPECT_EQ(slurp(a / "spectrum_POV-POV-POV_lp3.json"), slurp(b / "spectrum_POV-POV-POV_lp3.json"));
}

}  // namespace
