// fracburst: blow-up bounds and numerical blow-up times for coupled
// fractional power-law systems.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fracburst/cli/commands.hpp"

namespace fs = std::filesystem;
using namespace fracburst::cli;

int main(int argc, char** argv) {
  CLI::App app{"Blow-up bounds and numerical blow-up times for fractional power-law systems", "fracburst"};
  app.require_subcommand(1);

  std::string config_path;
  fs::path out_dir = ".";
  std::optional<double> lambda_min, lambda_max;
  std::size_t samples = 400;

  auto* bound = app.add_subcommand("bound", "Print the theorem's blow-up time bound for each alpha");
  bound->add_option("config", config_path, "Scenario file")->required();

  auto* solve = app.add_subcommand("solve", "Integrate the system and write trajectory CSVs");
  solve->add_option("config", config_path, "Scenario file")->required();
  solve->add_option("--out-dir", out_dir, "Output directory");

  auto* detect = app.add_subcommand("detect", "Estimate the blow-up time by grid refinement");
  detect->add_option("config", config_path, "Scenario file")->required();

  auto* bcurve = app.add_subcommand("b-curve", "Sample B(lambda) for the active theorem branch");
  bcurve->add_option("config", config_path, "Scenario file")->required();
  bcurve->add_option("--lambda-min", lambda_min, "Left end of the lambda range");
  bcurve->add_option("--lambda-max", lambda_max, "Right end of the lambda range");
  bcurve->add_option("--samples", samples, "Number of samples")->check(CLI::Range(2, 1000000));
  bcurve->add_option("--out-dir", out_dir, "Output directory");

  auto* reproduce = app.add_subcommand("reproduce", "Recompute the reference tables and figures");
  reproduce->add_option("--out-dir", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*reproduce) return cmd_reproduce(out_dir, std::cout, std::cerr);
    const ScenarioConfig cfg = load_config(config_path);
    if (*bound) return cmd_bound(cfg, std::cout, std::cerr);
    if (*solve) return cmd_solve(cfg, out_dir, std::cout, std::cerr);
    if (*detect) return cmd_detect(cfg, std::cout, std::cerr);
    return cmd_b_curve(cfg, lambda_min, lambda_max, samples, out_dir, std::cout, std::cerr);
  } catch (const fracburst::config_error& e) {
    std::cerr << e.what() << "\n";
    return kConfigError;
  } catch (const fracburst::error& e) {
    std::cerr << e.what() << "\n";
    return kNumericFailure;
  }
}
