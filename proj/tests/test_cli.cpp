#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "fracburst/cli/commands.hpp"

using namespace fracburst;
using namespace fracburst::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kConfigs = FRACBURST_CONFIG_DIR;

ScenarioConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "test.cfg");
}

const std::string kValid = R"(name = demo
[system]
alpha = 0.4, 0.9
q1 = 0.5   # time exponents
q2 = 1.5
p11 = 1.5
p12 = 3.6
p21 = 0.5
p22 = 2.4
x0 = 1
y0 = 1.2
[solver]
T = 1.5
N = 2048
[detection]
threshold = 1e6
budget = 3
)";

std::size_t config_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const config_error& e) {
    return e.line();
  }
  return 0;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("fracburst_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + FRACBURST_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Config, ParsesAllSections) {
  const ScenarioConfig c = parse(kValid);
  EXPECT_EQ(c.name, "demo");
  ASSERT_EQ(c.alphas.size(), 2u);
  EXPECT_EQ(c.alphas[1], 0.9);
  EXPECT_EQ(c.system.p12, 3.6);
  EXPECT_EQ(c.system.y0, 1.2);
  EXPECT_EQ(c.horizon, 1.5);
  EXPECT_EQ(c.steps, 2048u);
  EXPECT_EQ(c.threshold, 1e6);
  EXPECT_EQ(c.budget, 3u);
  EXPECT_EQ(c.at(0.9).alpha, 0.9);
}

TEST(Config, DefaultsWhenOptionalBlocksAbsent) {
  const ScenarioConfig c = parse("[system]\nalpha=0.5\nq1=0\nq2=0\np11=0\np12=3.2\np21=0.2\np22=0.5\nx0=0.5\ny0=0.5\n");
  EXPECT_FALSE(c.horizon);
  EXPECT_EQ(c.steps, 4096u);
  EXPECT_EQ(c.threshold, 1e8);
  EXPECT_EQ(c.budget, 5u);
}

TEST(Config, ShippedConfigsLoad) {
  for (const char* f : {"example1.cfg", "example2.cfg", "example3.cfg", "mild.cfg"}) {
    EXPECT_NO_THROW(load_config(kConfigs / f)) << f;
  }
  EXPECT_EQ(load_config(kConfigs / "example2.cfg").system.p12, 3.2);
}

TEST(Config, ErrorsCarryLineNumbers) {
  std::string bad = kValid;
  bad.replace(bad.find("p21 = 0.5"), 9, "p21 = abc");
  EXPECT_EQ(config_error_line(bad), 8u);

  bad = kValid;
  bad.replace(bad.find("budget = 3"), 10, "budget = 2.5");
  EXPECT_EQ(config_error_line(bad), 17u);

  EXPECT_EQ(config_error_line(kValid + "[plotting]\n"), 18u);
  EXPECT_EQ(config_error_line(kValid + "N = 10\n"), 18u);
  EXPECT_EQ(config_error_line(kValid + "colour = red\n"), 18u);
  EXPECT_EQ(config_error_line(kValid + "[system]\n"), 18u);
  EXPECT_EQ(config_error_line(kValid + "just words\n"), 18u);
}

TEST(Config, RejectsBadValues) {
  auto with = [](const std::string& from, const std::string& to) {
    std::string s = kValid;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  EXPECT_THROW(parse(with("alpha = 0.4, 0.9", "alpha = 1.2")), config_error);
  EXPECT_THROW(parse(with("alpha = 0.4, 0.9", "alpha = 0.4,")), config_error);
  EXPECT_THROW(parse(with("x0 = 1", "x0 = 0")), config_error);
  EXPECT_THROW(parse(with("p12 = 3.6", "p12 = -3.6")), config_error);
  EXPECT_THROW(parse(with("p12 = 3.6", "p12 = inf")), config_error);
  EXPECT_THROW(parse(with("N = 2048", "N = 0")), config_error);
  EXPECT_THROW(parse(with("T = 1.5", "T = -1")), config_error);
  EXPECT_THROW(parse(with("y0 = 1.2\n", "")), config_error);
  EXPECT_THROW(parse(with("[solver]\nT = 1.5", "[solver]\nthreshold = 1e7\nT = 1.5")), config_error);
  EXPECT_THROW(parse("name = x\n"), config_error);
  EXPECT_THROW(parse(with("name = demo", "name = a/b")), config_error);
}

TEST(Config, MissingFileIsConfigError) {
  EXPECT_THROW(load_config("/nonexistent/fracburst.cfg"), config_error);
}

TEST(Csv, HeaderAndTwelveDigits) {
  Trajectory tr(2, 0.1);
  const double a[] = {1.0, 1.0 / 3.0};
  tr.push(0.0, a);
  std::ostringstream os;
  write_trajectory_csv(os, tr);
  EXPECT_EQ(os.str(), "t,x1,x2\n0,1,0.333333333333\n");
  EXPECT_EQ(scenario_stem("example1", 0.1), "example1_alpha0.1");
}

TEST(Csv, RoundTripWithinPrintedPrecision) {
  const SystemSpec spec = make_power_law_system({0.6, 0.5, 0.5, 1.0, 3.0, 2.0, 4.0, 1.0, 1.0});
  const Trajectory tr = solve(spec, {1.0, 500, 1e8, true});
  std::stringstream ss;
  write_trajectory_csv(ss, tr);
  const auto rows = read_csv_rows(ss);
  ASSERT_EQ(rows.size(), tr.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    ASSERT_EQ(rows[k].size(), 3u);
    EXPECT_NEAR(rows[k][0], tr.times()[k], 1e-12 * std::max(1.0, tr.times()[k]));
    for (std::size_t i = 0; i < 2; ++i) EXPECT_LE(std::abs(rows[k][i + 1] / tr.state(k)[i] - 1.0), 5e-12);
  }
}

TEST(Csv, ConstantColumnsForZeroRightHandSide) {
  const SystemSpec spec{0.5, {2.5, 7.0, 0.125}, RhsFunction([](double, std::span<const double>, std::span<double> out) {
                          std::fill(out.begin(), out.end(), 0.0);
                        })};
  std::stringstream ss;
  write_trajectory_csv(ss, solve(spec, {1.0, 50, 1e8, true}));
  EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')), "t,x1,x2,x3");
  const auto rows = read_csv_rows(ss);
  ASSERT_EQ(rows.size(), 51u);
  for (const auto& r : rows) {
    EXPECT_EQ(r[1], 2.5);
    EXPECT_EQ(r[2], 7.0);
    EXPECT_EQ(r[3], 0.125);
  }
}

TEST(Commands, BoundPrintsCertificate) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_bound(load_config(kConfigs / "example1.cfg"), out, err), kOk);
  EXPECT_NE(out.str().find("branch = DISTINCT_Q"), std::string::npos);
  EXPECT_NE(out.str().find("tau_ub = 0.72096"), std::string::npos);
  EXPECT_NE(out.str().find("gamma_j = 2.05"), std::string::npos);
  EXPECT_TRUE(err.str().empty());
}

TEST(Commands, BoundNotApplicable) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_bound(load_config(kConfigs / "mild.cfg"), out, err), kNotApplicable);
  EXPECT_NE(err.str().find("p12 >= 3 + p21"), std::string::npos);
}

TEST(Commands, SolveWritesCsvAndPlot) {
  const fs::path dir = fresh_dir("solve");
  ScenarioConfig cfg = load_config(kConfigs / "example3.cfg");
  cfg.alphas = {0.6};
  cfg.steps = 512;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_solve(cfg, dir, out, err), kOk) << err.str();
  ASSERT_TRUE(fs::exists(dir / "example3_alpha0.6.csv"));
  ASSERT_TRUE(fs::exists(dir / "example3_alpha0.6.plot"));
  EXPECT_NE(slurp(dir / "example3_alpha0.6.plot").find("'example3_alpha0.6.csv'"), std::string::npos);
  EXPECT_NE(out.str().find("overflowed"), std::string::npos);
}

TEST(Commands, SolveWithoutTheoremNeedsHorizon) {
  const fs::path dir = fresh_dir("solve_mild");
  ScenarioConfig cfg = load_config(kConfigs / "mild.cfg");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_solve(cfg, dir, out, err), kOk);
  cfg.horizon.reset();
  EXPECT_EQ(cmd_solve(cfg, dir, out, err), kConfigError);
}

TEST(Commands, DetectReportsBoundComparison) {
  ScenarioConfig cfg = load_config(kConfigs / "example3.cfg");
  cfg.alphas = {0.9};
  std::ostringstream out, err;
  ASSERT_EQ(cmd_detect(cfg, out, err), kOk);
  EXPECT_NE(out.str().find("t_num < tau_ub: yes"), std::string::npos);
}

TEST(Commands, BCurveRangeAndDomain) {
  const fs::path dir = fresh_dir("bcurve");
  ScenarioConfig cfg = load_config(kConfigs / "example1.cfg");
  cfg.alphas = {0.4};
  std::ostringstream out, err;
  ASSERT_EQ(cmd_b_curve(cfg, -0.5, 1.0, 400, dir, out, err), kOk);
  std::ifstream in(dir / "example1_alpha0.4_B.csv");
  const auto rows = read_csv_rows(in);
  ASSERT_EQ(rows.size(), 400u);
  EXPECT_EQ(rows.front()[0], -0.5);
  EXPECT_EQ(rows.back()[0], 1.0);
  double lowest = INFINITY;
  for (const auto& r : rows) lowest = std::min(lowest, r[1]);
  EXPECT_NEAR(lowest, 2.61029, 1e-3);
  EXPECT_EQ(cmd_b_curve(cfg, -2.0, 1.0, 400, dir, out, err), kConfigError);
  EXPECT_EQ(cmd_b_curve(cfg, 0.5, 0.2, 400, dir, out, err), kConfigError);
  EXPECT_EQ(cmd_b_curve(load_config(kConfigs / "mild.cfg"), {}, {}, 400, dir, out, err), kNotApplicable);
}

TEST(Commands, UnwritableOutputDirectory) {
  ScenarioConfig cfg = load_config(kConfigs / "mild.cfg");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_solve(cfg, "/proc/fracburst_no_such_dir", out, err), kOutputFailure);
}

TEST(Executable, ExitCodes) {
  const std::string cfg = (kConfigs / "example1.cfg").string();
  EXPECT_EQ(run_cli("bound \"" + cfg + "\""), 0);
  EXPECT_EQ(run_cli("bound \"" + (kConfigs / "mild.cfg").string() + "\""), 3);
  EXPECT_EQ(run_cli("bound /nonexistent.cfg"), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli(""), 2);
  EXPECT_EQ(run_cli("b-curve \"" + cfg + "\" --lambda-min notanumber"), 2);
  EXPECT_EQ(run_cli("--help"), 0);
}

TEST(Executable, ReproduceIsDeterministicAcrossThreadCounts) {
  const fs::path a = fresh_dir("reproduce_a");
  const fs::path b = fresh_dir("reproduce_b");
  std::ostringstream out_a, err_a;
  ASSERT_EQ(cmd_reproduce(a, out_a, err_a, 1), kOk) << err_a.str();
  const std::string cmd = std::string("FRACBURST_THREADS=3 \"") + FRACBURST_CLI_PATH + "\" reproduce --out-dir \"" +
                          b.string() + "\" > \"" + (b / "stdout.txt").string() + "\"";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(out_a.str(), slurp(b / "stdout.txt"));
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    ++files;
    EXPECT_EQ(slurp(entry.path()), slurp(b / entry.path().filename())) << entry.path().filename();
  }
  // 12 trajectories and 4 B curves, each with a plot script.
  EXPECT_EQ(files, 32u);
  EXPECT_NE(out_a.str().find("reference t_num inconsistent"), std::string::npos);
}
