#pragma once

// The three reference systems, with published bound and blow-up-time values
// used by `fracburst reproduce` and the acceptance suite.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fracburst/cli/config.hpp"

namespace fracburst::cli {

inline constexpr std::array<double, 4> kReferenceAlphas{0.1, 0.4, 0.6, 0.9};

struct ReferenceRow {
  double alpha = 0.0;
  double tau_ub = 0.0;
  std::optional<double> lambda_m;
  /// Graph-read blow-up time; empty when the published values disagree.
  std::optional<double> t_num;
  /// Competing readings when the published values disagree.
  std::vector<double> t_num_candidates;
};

struct ReferenceScenario {
  ScenarioConfig config;
  std::string description;
  std::array<ReferenceRow, 4> rows;
};

inline std::vector<ReferenceScenario> reference_scenarios() {
  std::vector<ReferenceScenario> out;
  const std::vector<double> alphas(kReferenceAlphas.begin(), kReferenceAlphas.end());

  ReferenceScenario ex1;
  ex1.config.name = "example1";
  ex1.config.alphas = alphas;
  ex1.config.system = {0.1, 0.5, 1.5, 1.5, 3.6, 0.5, 2.4, 1.0, 1.2};
  ex1.description = "D x = t^0.5 x^1.5 y^3.6,  D y = t^1.5 y^0.5 x^2.4,  x0 = 1, y0 = 1.2";
  ex1.rows = {{{0.1, 0.720, -0.802, std::nullopt, {0.085, 0.85}},
               {0.4, 0.998, -0.358, 0.28, {}},
               {0.6, 1.169, -0.083, 0.44, {}},
               {0.9, 1.415, 0.315, 0.67, {}}}};
  out.push_back(ex1);

  ReferenceScenario ex2;
  ex2.config.name = "example2";
  ex2.config.alphas = alphas;
  ex2.config.system = {0.1, 0.0, 0.0, 0.0, 3.2, 0.2, 0.5, 0.5, 0.5};
  ex2.description = "D x = y^3.2,  D y = y^0.2 x^0.5,  x0 = y0 = 0.5";
  ex2.rows = {{{0.1, 8.899, std::nullopt, 0.35, {}},
               {0.4, 6.333, std::nullopt, 3.8, {}},
               {0.6, 7.297, std::nullopt, 5.1, {}},
               {0.9, 8.948, std::nullopt, 6.9, {}}}};
  out.push_back(ex2);

  ReferenceScenario ex3;
  ex3.config.name = "example3";
  ex3.config.alphas = alphas;
  ex3.config.system = {0.1, 0.5, 0.5, 1.0, 3.0, 2.0, 4.0, 1.0, 1.0};
  ex3.description = "D x = t^0.5 x y^3,  D y = t^0.5 y^2 x^4,  x0 = y0 = 1";
  ex3.rows = {{{0.1, 1.228, std::nullopt, 0.019, {}},
               {0.4, 1.551, std::nullopt, 0.11, {}},
               {0.6, 1.726, std::nullopt, 0.21, {}},
               {0.9, 1.967, std::nullopt, 0.42, {}}}};
  out.push_back(ex3);
  return out;
}

}  // namespace fracburst::cli
