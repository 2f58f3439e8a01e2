#pragma once

// Subcommand implementations behind tools/fracburst.cpp. Each returns the
// process exit code and writes human-readable output to the given streams.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fracburst/blowup_detect.hpp"
#include "fracburst/bounds.hpp"
#include "fracburst/cli/config.hpp"
#include "fracburst/cli/output.hpp"
#include "fracburst/cli/scenarios.hpp"
#include "fracburst/solver.hpp"

namespace fracburst::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kNotApplicable = 3,
  kNumericFailure = 4,
  kOutputFailure = 5,
};

namespace detail {

inline std::string sig6(double v) { return format_number(v, 6); }

inline std::string component_name(std::size_t j) { return j == 1 ? "x" : "y"; }

inline void print_branch(std::ostream& out, const BranchBound& b) {
  out << "  j = " << b.j << " (bound via " << component_name(b.j) << "0 = " << sig6(b.u0) << ")\n"
      << "  gamma_j = " << sig6(b.gamma) << "\n"
      << "  p_j = " << sig6(b.p) << "\n"
      << "  p_tilde_j = " << sig6(b.p_tilde) << "\n"
      << "  q_j = " << sig6(b.q) << "\n"
      << "  lambda_m = " << sig6(b.scalar.lambda_m) << "\n"
      << "  B(lambda_m) = " << sig6(b.scalar.B_min) << "\n"
      << "  tau = " << sig6(b.scalar.tau_ub) << "\n";
}

inline void print_certificate(std::ostream& out, double alpha, const BoundCertificate& cert) {
  out << "alpha = " << sig6(alpha) << "\n"
      << "branch = " << to_string(cert.branch) << "\n";
  for (std::size_t k = 0; k < cert.branches.size(); ++k) {
    if (cert.branches.size() > 1) out << (k == cert.selected ? "selected:\n" : "other:\n");
    print_branch(out, cert.branches[k]);
  }
  out << "tau_ub = " << sig6(cert.tau_ub) << "\n";
}

// Horizon for solve/detect: configured T, else 1.1 * tau_ub.
inline double horizon_for(const ScenarioConfig& cfg, double alpha) {
  if (cfg.horizon) return *cfg.horizon;
  try {
    return 1.1 * theorem_bound(cfg.at(alpha)).tau_ub;
  } catch (const not_applicable_error&) {
    throw config_error(cfg.name, 0, "[solver] T is required when the blow-up theorem does not apply");
  }
}

inline unsigned thread_budget() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FRACBURST_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) n = static_cast<unsigned>(std::min<long>(v, 256));
  }
  return n;
}

// Runs job(k) for k in [0, count) on at most `threads` workers.
template <class Job>
void parallel_for(std::size_t count, unsigned threads, Job job) {
  threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) job(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) job(k);
    });
  }
}

inline std::string b_curve_csv(const BranchBound& b, double alpha, double lambda_lo, double lambda_hi,
                               std::size_t samples) {
  std::ostringstream csv;
  csv << "lambda,B\n";
  for (std::size_t k = 0; k < samples; ++k) {
    const double lambda =
        samples == 1 ? lambda_lo : lambda_lo + (lambda_hi - lambda_lo) * static_cast<double>(k) / (samples - 1);
    csv << format_number(lambda) << ',' << format_number(big_B(lambda, alpha, b.p_tilde, b.q)) << '\n';
  }
  return csv.str();
}

}  // namespace detail

/// Prints the blow-up certificate for every alpha of the scenario.
inline int cmd_bound(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err) {
  int code = kOk;
  out << "scenario = " << cfg.name << "\n";
  for (double alpha : cfg.alphas) {
    try {
      detail::print_certificate(out, alpha, theorem_bound(cfg.at(alpha)));
    } catch (const not_applicable_error& e) {
      out << "alpha = " << detail::sig6(alpha) << "\nbranch = NOT_APPLICABLE\n";
      err << "alpha = " << detail::sig6(alpha) << ": " << e.what() << "\n";
      code = std::max<int>(code, kNotApplicable);
    } catch (const error& e) {
      err << "alpha = " << detail::sig6(alpha) << ": " << e.what() << "\n";
      code = std::max<int>(code, kNumericFailure);
    }
  }
  return code;
}

/// Integrates the scenario and writes `<name>_alpha<value>.csv` plus a plot script.
inline int cmd_solve(const ScenarioConfig& cfg, const std::filesystem::path& out_dir, std::ostream& out,
                     std::ostream& err) {
  int code = kOk;
  for (double alpha : cfg.alphas) {
    try {
      const SolverConfig sc{detail::horizon_for(cfg, alpha), cfg.steps, cfg.threshold, true};
      const Trajectory traj = solve(make_power_law_system(cfg.at(alpha)), sc);
      const std::string stem = scenario_stem(cfg.name, alpha);
      std::ostringstream csv, plot;
      write_trajectory_csv(csv, traj);
      trajectory_plot_script(plot, stem, traj.dimension(), cfg.name + ", alpha = " + detail::sig6(alpha));
      write_file(out_dir / (stem + ".csv"), csv.str());
      write_file(out_dir / (stem + ".plot"), plot.str());
      const Termination& term = traj.termination();
      out << stem << ".csv: " << to_string(term.status);
      if (term.status == Status::Overflowed) {
        out << " at t = " << detail::sig6(traj.times().back()) << " (step " << term.step << ", component x"
            << term.component + 1 << ")";
      } else if (term.status == Status::NonFinite) {
        out << " at step " << term.step;
      }
      out << ", T = " << detail::sig6(sc.horizon) << ", N = " << sc.steps << "\n";
    } catch (const config_error& e) {
      err << e.what() << "\n";
      return kConfigError;
    } catch (const output_error& e) {
      err << e.what() << "\n";
      return kOutputFailure;
    } catch (const error& e) {
      err << "alpha = " << detail::sig6(alpha) << ": " << e.what() << "\n";
      code = kNumericFailure;
    }
  }
  return code;
}

/// Grid-refined blow-up time for every alpha, compared against tau_ub when available.
inline int cmd_detect(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err) {
  int code = kOk;
  out << "scenario = " << cfg.name << "\n";
  for (double alpha : cfg.alphas) {
    try {
      const SolverConfig sc{detail::horizon_for(cfg, alpha), cfg.steps, cfg.threshold, true};
      const DetectionReport report = detect(make_power_law_system(cfg.at(alpha)), sc, {cfg.budget});
      out << "alpha = " << detail::sig6(alpha) << "\n";
      for (const auto& run : report.runs) {
        out << "  N = " << run.steps << ", h = " << detail::sig6(run.h) << ", crossing = "
            << (run.crossing ? detail::sig6(*run.crossing) : std::string("none")) << "\n";
      }
      if (report.t_num) {
        out << "  t_num = " << detail::sig6(*report.t_num) << " +/- " << detail::sig6(report.uncertainty)
            << (report.converged ? "" : " (refinement budget exhausted)") << "\n";
        if (report.offending_component) out << "  first component past threshold: x" << *report.offending_component + 1 << "\n";
      } else {
        out << "  no crossing in [0, " << detail::sig6(sc.horizon) << "]\n";
      }
      try {
        const BoundCertificate cert = theorem_bound(cfg.at(alpha));
        out << "  tau_ub = " << detail::sig6(cert.tau_ub);
        if (report.t_num) out << ", t_num < tau_ub: " << (*report.t_num < cert.tau_ub ? "yes" : "NO");
        out << "\n";
      } catch (const not_applicable_error&) {
        out << "  tau_ub = n/a (theorem not applicable)\n";
      }
    } catch (const config_error& e) {
      err << e.what() << "\n";
      return kConfigError;
    } catch (const error& e) {
      err << "alpha = " << detail::sig6(alpha) << ": " << e.what() << "\n";
      code = kNumericFailure;
    }
  }
  return code;
}

/// Samples B(lambda) of the active theorem branch; writes `<stem>_B.csv` and `.plot`.
inline int cmd_b_curve(const ScenarioConfig& cfg, std::optional<double> lambda_min, std::optional<double> lambda_max,
                       std::size_t samples, const std::filesystem::path& out_dir, std::ostream& out,
                       std::ostream& err) {
  if (samples < 2) {
    err << "b-curve: need at least 2 samples\n";
    return kConfigError;
  }
  int code = kOk;
  for (double alpha : cfg.alphas) {
    try {
      const BoundCertificate cert = theorem_bound(cfg.at(alpha));
      const BranchBound& b = cert.active();
      const double floor = big_B_domain_floor(alpha, b.p_tilde, b.q);
      const double lm = b.scalar.lambda_m;
      const double lo = lambda_min.value_or(floor + 0.01 * (lm - floor));
      const double hi = lambda_max.value_or(lm + 2.0 * (lm - floor) + 0.5);
      if (!(lo > floor) || !(hi > lo)) {
        err << "b-curve: alpha = " << detail::sig6(alpha) << ": lambda range [" << lo << ", " << hi
            << "] leaves the domain lambda > " << floor << "\n";
        return kConfigError;
      }
      const std::string stem = scenario_stem(cfg.name, alpha) + "_B";
      std::ostringstream plot;
      b_curve_plot_script(plot, stem, lm, "B(lambda), " + cfg.name + ", alpha = " + detail::sig6(alpha));
      write_file(out_dir / (stem + ".csv"), detail::b_curve_csv(b, alpha, lo, hi, samples));
      write_file(out_dir / (stem + ".plot"), plot.str());
      out << stem << ".csv: lambda in [" << detail::sig6(lo) << ", " << detail::sig6(hi) << "], lambda_m = "
          << detail::sig6(lm) << ", B(lambda_m) = " << detail::sig6(b.scalar.B_min) << "\n";
    } catch (const not_applicable_error& e) {
      err << "alpha = " << detail::sig6(alpha) << ": " << e.what() << "\n";
      code = std::max<int>(code, kNotApplicable);
    } catch (const output_error& e) {
      err << e.what() << "\n";
      return kOutputFailure;
    } catch (const error& e) {
      err << "alpha = " << detail::sig6(alpha) << ": " << e.what() << "\n";
      code = std::max<int>(code, kNumericFailure);
    }
  }
  return code;
}

/// One row of the reproduction tables.
struct ReproduceRow {
  std::size_t scenario = 0;
  ReferenceRow reference;
  std::optional<BoundCertificate> certificate;
  std::optional<DetectionReport> detection;
  std::string failure;
  std::string trajectory_csv;
  std::string b_curve;
};

inline constexpr std::size_t kReproduceSteps = 4096;
inline constexpr std::size_t kReproduceBudget = 5;
inline constexpr double kReproduceThreshold = 1e8;

/// Bound + detection pipeline for every reference scenario and alpha; rows run on
/// up to `threads` workers, results come back in table order.
inline std::vector<ReproduceRow> compute_reproduction(unsigned threads) {
  const auto scenarios = reference_scenarios();
  std::vector<ReproduceRow> rows;
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    for (const auto& ref : scenarios[s].rows) rows.push_back({s, ref, {}, {}, {}, {}, {}});
  }
  detail::parallel_for(rows.size(), threads, [&](std::size_t k) {
    ReproduceRow& row = rows[k];
    const ScenarioConfig& cfg = scenarios[row.scenario].config;
    const double alpha = row.reference.alpha;
    try {
      row.certificate = theorem_bound(cfg.at(alpha));
      const SystemSpec spec = make_power_law_system(cfg.at(alpha));
      const SolverConfig sc{1.1 * row.certificate->tau_ub, kReproduceSteps, kReproduceThreshold, true};
      row.detection = detect(spec, sc, {kReproduceBudget});
      std::ostringstream csv;
      write_trajectory_csv(csv, solve(spec, sc));
      row.trajectory_csv = csv.str();
      if (row.reference.lambda_m) {
        const BranchBound& b = row.certificate->active();
        const double floor = big_B_domain_floor(alpha, b.p_tilde, b.q);
        const double lm = b.scalar.lambda_m;
        row.b_curve = detail::b_curve_csv(b, alpha, floor + 0.01 * (lm - floor), lm + 2.0 * (lm - floor) + 0.5, 400);
      }
    } catch (const std::exception& e) {
      row.failure = e.what();
    }
  });
  return rows;
}

/// Prints the three tables and writes every trajectory / B-curve CSV to out_dir.
inline int cmd_reproduce(const std::filesystem::path& out_dir, std::ostream& out, std::ostream& err,
                         unsigned threads = detail::thread_budget()) {
  const auto scenarios = reference_scenarios();
  const auto rows = compute_reproduction(threads);
  int code = kOk;
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    const bool show_lambda = scenarios[s].rows.front().lambda_m.has_value();
    out << scenarios[s].config.name << ": " << scenarios[s].description << "\n";
    for (const auto& row : rows) {
      if (row.scenario == s && row.certificate) {
        out << "branch: " << to_string(row.certificate->branch) << "\n";
        break;
      }
    }
    out << std::left << std::setw(7) << "alpha";
    if (show_lambda) out << std::setw(12) << "lambda_m";
    out << std::setw(12) << "t_num" << std::setw(13) << "+/-h" << std::setw(12) << "ref t_num" << std::setw(11)
        << "tau_ub"
        << "t_num<tau_ub\n";
    for (const auto& row : rows) {
      if (row.scenario != s) continue;
      out << std::setw(7) << detail::sig6(row.reference.alpha);
      if (!row.failure.empty()) {
        out << "error: " << row.failure << "\n";
        code = kNumericFailure;
        continue;
      }
      const auto& cert = *row.certificate;
      const auto& det = *row.detection;
      if (show_lambda) out << std::setw(12) << detail::sig6(cert.active().scalar.lambda_m);
      std::string ref = "-";
      if (row.reference.t_num) {
        ref = detail::sig6(*row.reference.t_num);
      } else if (!row.reference.t_num_candidates.empty()) {
        ref.clear();
        for (double c : row.reference.t_num_candidates) ref += (ref.empty() ? "" : "|") + detail::sig6(c);
      }
      out << std::setw(12) << (det.t_num ? detail::sig6(*det.t_num) : std::string("none"))
          << std::setw(13) << detail::sig6(det.uncertainty) << std::setw(12) << ref << std::setw(11)
          << detail::sig6(cert.tau_ub);
      out << (det.t_num && *det.t_num < cert.tau_ub ? "✓" : "✗");
      if (!row.reference.t_num_candidates.empty()) {
        out << "  [reference t_num inconsistent: " << ref << "; not scored]";
      }
      if (!det.converged) out << "  [refinement budget exhausted]";
      out << "\n";
    }
    out << "\n";
  }
  try {
    for (const auto& row : rows) {
      if (!row.failure.empty()) continue;
      const auto& cfg = scenarios[row.scenario].config;
      const std::string stem = scenario_stem(cfg.name, row.reference.alpha);
      std::ostringstream plot;
      trajectory_plot_script(plot, stem, 2, cfg.name + ", alpha = " + detail::sig6(row.reference.alpha));
      write_file(out_dir / (stem + ".csv"), row.trajectory_csv);
      write_file(out_dir / (stem + ".plot"), plot.str());
      if (!row.b_curve.empty()) {
        std::ostringstream bplot;
        b_curve_plot_script(bplot, stem + "_B", row.certificate->active().scalar.lambda_m,
                            "B(lambda), " + cfg.name + ", alpha = " + detail::sig6(row.reference.alpha));
        write_file(out_dir / (stem + "_B.csv"), row.b_curve);
        write_file(out_dir / (stem + "_B.plot"), bplot.str());
      }
    }
  } catch (const output_error& e) {
    err << e.what() << "\n";
    return kOutputFailure;
  }
  return code;
}

}  // namespace fracburst::cli
