#pragma once

// Numerical blow-up time from grid-doubling refinement of the solver.

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <vector>

#include "fracburst/error.hpp"
#include "fracburst/solver.hpp"

namespace fracburst {

struct RefinementPolicy {
  /// Grid doublings allowed after the base run.
  std::size_t max_doublings = 5;
};

struct RefinementRun {
  std::size_t steps = 0;
  double h = 0.0;
  /// First grid time where sum_i |x_i| exceeds the threshold.
  std::optional<double> crossing;
};

struct DetectionReport {
  /// Empty when no run crossed the threshold in [0, T].
  std::optional<double> t_num;
  /// Grid spacing of the finest run.
  double uncertainty = 0.0;
  std::vector<RefinementRun> runs;
  bool converged = false;
  /// Component that first left the threshold band in the finest run.
  std::optional<std::size_t> offending_component;

  bool blew_up() const noexcept { return t_num.has_value(); }
};

/// First grid time at which sum_i |x_i| > threshold, if any.
inline std::optional<double> crossing_time(const Trajectory& traj, double threshold) {
  for (std::size_t k = 0; k < traj.size(); ++k) {
    double norm = 0.0;
    for (double v : traj.state(k)) norm += std::abs(v);
    if (norm > threshold) return traj.times()[k];
  }
  return std::nullopt;
}

/// Runs the solver at N, 2N, 4N, ... until two successive crossing times differ
/// by less than the coarser grid spacing or the doubling budget is spent.
/// Two successive runs without a crossing end the search with no blow-up.
inline DetectionReport detect(const SystemSpec& spec, const SolverConfig& base, const RefinementPolicy& policy = {}) {
  spec.validate();
  base.validate();
  DetectionReport report;
  SolverConfig config = base;
  for (std::size_t level = 0; level <= policy.max_doublings; ++level) {
    const Trajectory traj = solve(spec, config);
    if (traj.termination().status == Status::NonFinite) {
      std::ostringstream os;
      os << "detect: solver produced non-finite values at t = "
         << static_cast<double>(traj.termination().step) * traj.step() << " (N = " << config.steps << ")";
      throw error(os.str());
    }
    RefinementRun run{config.steps, config.step(), crossing_time(traj, config.overflow_threshold)};
    report.runs.push_back(run);
    report.uncertainty = run.h;
    report.t_num = run.crossing;
    report.offending_component.reset();
    if (traj.termination().status == Status::Overflowed) {
      report.offending_component = traj.termination().component;
    }
    if (level > 0) {
      const RefinementRun& coarse = report.runs[report.runs.size() - 2];
      if (run.crossing && coarse.crossing && std::abs(*run.crossing - *coarse.crossing) < coarse.h) {
        report.converged = true;
        break;
      }
      if (!run.crossing && !coarse.crossing) {
        report.converged = true;
        break;
      }
    }
    config.steps *= 2;
  }
  return report;
}

}  // namespace fracburst
