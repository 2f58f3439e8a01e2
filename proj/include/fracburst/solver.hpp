#pragma once

// Adams-Bashforth-Moulton predictor-corrector for n-component Caputo systems
//   D^alpha x_i(t) = f_i(t, x(t)),  x(0) = x0,
// on the uniform grid t_n = n h, plus the L1 discrete Caputo derivative.

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "fracburst/bounds.hpp"
#include "fracburst/error.hpp"
#include "fracburst/special_fn.hpp"

namespace fracburst {

/// f_i(t, x) = t^{q_i} prod_k x_k^{p_ik}.
struct PowerLawRhs {
  std::vector<double> q;
  /// exponents[i][k] is the power of x_k in equation i.
  std::vector<std::vector<double>> exponents;
};

/// General right-hand side: writes f(t, state) into out (same length as state).
using RhsFunction = std::function<void(double t, std::span<const double> state, std::span<double> out)>;

struct SystemSpec {
  double alpha = 0.5;
  std::vector<double> initial_state;
  std::variant<PowerLawRhs, RhsFunction> rhs;

  std::size_t dimension() const noexcept { return initial_state.size(); }

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw domain_error("SystemSpec: alpha must lie in (0, 1]");
    if (initial_state.empty()) throw domain_error("SystemSpec: dimension must be >= 1");
    for (double v : initial_state) {
      if (!std::isfinite(v)) throw domain_error("SystemSpec: initial state must be finite");
    }
    if (const auto* pl = std::get_if<PowerLawRhs>(&rhs)) {
      const std::size_t n = dimension();
      if (pl->q.size() != n || pl->exponents.size() != n) {
        throw domain_error("SystemSpec: power-law exponents do not match the dimension");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!(pl->q[i] >= 0.0)) throw domain_error("SystemSpec: time exponents must be >= 0");
        if (pl->exponents[i].size() != n) throw domain_error("SystemSpec: exponent matrix must be n x n");
        for (double e : pl->exponents[i]) {
          if (!(e >= 0.0)) throw domain_error("SystemSpec: state exponents must be >= 0");
        }
        if (!(initial_state[i] > 0.0)) throw domain_error("SystemSpec: power-law initial state must be positive");
      }
    } else if (!std::get<RhsFunction>(rhs)) {
      throw domain_error("SystemSpec: empty right-hand side");
    }
  }
};

/// The two-component system of PowerLawParams, state order (x, y).
inline SystemSpec make_power_law_system(const PowerLawParams& s) {
  PowerLawRhs rhs;
  rhs.q = {s.q1, s.q2};
  rhs.exponents = {{s.p11, s.p12}, {s.p22, s.p21}};
  return SystemSpec{s.alpha, {s.x0, s.y0}, std::move(rhs)};
}

struct SolverConfig {
  double horizon = 1.0;
  std::size_t steps = 1024;
  double overflow_threshold = 1e8;
  /// false = predictor only (fractional Euler).
  bool corrector_enabled = true;

  double step() const noexcept { return horizon / static_cast<double>(steps); }

  void validate() const {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) throw domain_error("SolverConfig: horizon T must be > 0");
    if (steps < 1) throw domain_error("SolverConfig: steps N must be >= 1");
    if (!(overflow_threshold > 0.0)) throw domain_error("SolverConfig: overflow threshold must be > 0");
  }
};

enum class Status { Completed, Overflowed, NonFinite };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Completed: return "completed";
    case Status::Overflowed: return "overflowed";
    case Status::NonFinite: return "non-finite";
  }
  return "?";
}

struct Termination {
  Status status = Status::Completed;
  /// Grid index where the run stopped (Overflowed / NonFinite).
  std::size_t step = 0;
  /// Offending component (Overflowed).
  std::size_t component = 0;
};

/// Grid values of a run. states are stored row-major, one row per step; an
/// overflowing row is kept, a non-finite one is not.
class Trajectory {
public:
  Trajectory(std::size_t dimension, double h) : dim_(dimension), h_(h) {}

  std::size_t dimension() const noexcept { return dim_; }
  double step() const noexcept { return h_; }
  std::size_t size() const noexcept { return times_.size(); }
  const std::vector<double>& times() const noexcept { return times_; }
  std::span<const double> state(std::size_t k) const { return {values_.data() + k * dim_, dim_}; }
  const Termination& termination() const noexcept { return termination_; }

  void push(double t, std::span<const double> x) {
    times_.push_back(t);
    values_.insert(values_.end(), x.begin(), x.end());
  }
  void set_termination(Termination t) { termination_ = t; }

private:
  std::size_t dim_;
  double h_;
  std::vector<double> times_;
  std::vector<double> values_;
  Termination termination_;
};

namespace detail {

// Generalized binomial coefficients C(c, k) for k = 0..count-1.
inline std::vector<double> binomials(double c, int count) {
  std::vector<double> out(count);
  out[0] = 1.0;
  for (int k = 1; k < count; ++k) out[k] = out[k - 1] * (c - (k - 1)) / k;
  return out;
}

// (m+1)^c - m^c without cancellation.
inline double power_first_difference(std::size_t m, double c) {
  if (m == 0) return 1.0;
  const double md = static_cast<double>(m);
  return std::pow(md, c) * std::expm1(c * std::log1p(1.0 / md));
}

inline constexpr int kSeriesTerms = 24;
inline constexpr double kSeriesCutoff = 0.125;

// (m+2)^c - 2 (m+1)^c + m^c without cancellation.
inline double power_second_difference(std::size_t m, double c) {
  const double w = static_cast<double>(m) + 1.0;
  const double u = 1.0 / w;
  if (u > kSeriesCutoff) {
    return std::pow(w + 1.0, c) - 2.0 * std::pow(w, c) + std::pow(w - 1.0, c);
  }
  // w^c [(1+u)^c + (1-u)^c - 2] = 2 w^c sum_k C(c, 2k) u^{2k}
  const auto binom = binomials(c, 2 * kSeriesTerms + 1);
  const double u2 = u * u;
  double acc = 0.0;
  double upow = u2;
  for (int k = 1; k <= kSeriesTerms; ++k) {
    acc += binom[2 * k] * upow;
    upow *= u2;
  }
  return 2.0 * std::pow(w, c) * acc;
}

// n^{alpha+1} - (n - alpha)(n+1)^alpha without cancellation.
inline double corrector_weight_first(std::size_t n, double alpha) {
  const double nd = static_cast<double>(n);
  const double v = 1.0 / (nd + 1.0);
  if (v > kSeriesCutoff) {
    return std::pow(nd, alpha + 1.0) - (nd - alpha) * std::pow(nd + 1.0, alpha);
  }
  // (n+1)^alpha sum_{k>=1} (-1)^{k+1} C(alpha+1, k+1) v^k
  const auto binom = binomials(alpha + 1.0, kSeriesTerms + 2);
  double acc = 0.0;
  double vpow = v;
  for (int k = 1; k <= kSeriesTerms; ++k) {
    acc += ((k % 2) == 1 ? 1.0 : -1.0) * binom[k + 1] * vpow;
    vpow *= v;
  }
  return std::pow(nd + 1.0, alpha) * acc;
}

// Four-accumulator dot product; fixed association order keeps runs bit-reproducible.
inline double dot(const double* a, const double* b, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    s0 += a[k] * b[k];
    s1 += a[k + 1] * b[k + 1];
    s2 += a[k + 2] * b[k + 2];
    s3 += a[k + 3] * b[k + 3];
  }
  for (; k < n; ++k) s0 += a[k] * b[k];
  return (s0 + s1) + (s2 + s3);
}

inline bool all_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

class RhsEvaluator {
public:
  explicit RhsEvaluator(const SystemSpec& spec) : spec_(spec) {}

  void operator()(double t, std::span<const double> x, std::span<double> out) const {
    if (const auto* pl = std::get_if<PowerLawRhs>(&spec_.rhs)) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        double v = std::pow(t, pl->q[i]);
        for (std::size_t k = 0; k < x.size(); ++k) {
          const double e = pl->exponents[i][k];
          if (e != 0.0) v *= std::pow(x[k], e);
        }
        out[i] = v;
      }
    } else {
      std::get<RhsFunction>(spec_.rhs)(t, x, out);
    }
  }

private:
  const SystemSpec& spec_;
};

}  // namespace detail

/// Corrector weight a_{j,n+1}, 0 <= j <= n.
inline double corrector_weight_a(std::size_t j, std::size_t n, double alpha) {
  if (j > n) throw domain_error("corrector_weight_a: requires j <= n");
  if (j == 0) return detail::corrector_weight_first(n, alpha);
  return detail::power_second_difference(n - j, alpha + 1.0);
}

/// Predictor weight b_{j,n+1} = h^alpha/alpha ((n+1-j)^alpha - (n-j)^alpha), 0 <= j <= n.
inline double predictor_weight_b(std::size_t j, std::size_t n, double alpha, double h) {
  if (j > n) throw domain_error("predictor_weight_b: requires j <= n");
  if (!(h > 0.0)) throw domain_error("predictor_weight_b: requires h > 0");
  return std::pow(h, alpha) / alpha * detail::power_first_difference(n - j, alpha);
}

/// PECE integration on [0, T] with N uniform steps.
///
/// Each step forms the predictor from the b-weighted history of cached
/// f(t_j, x_j), evaluates f once at the predicted point, and applies a single
/// corrector pass with the a-weighted history. All components advance
/// together. Stops at the first step where a component leaves
/// [-threshold, threshold] or any value is non-finite.
inline Trajectory solve(const SystemSpec& spec, const SolverConfig& config) {
  spec.validate();
  config.validate();
  const std::size_t dim = spec.dimension();
  const std::size_t N = config.steps;
  const double alpha = spec.alpha;
  const double h = config.step();
  const double h_alpha = std::pow(h, alpha);
  const double predictor_scale = h_alpha / alpha * reciprocal_gamma(alpha);
  const double corrector_scale = h_alpha * reciprocal_gamma(alpha + 2.0);
  const detail::RhsEvaluator rhs(spec);

  // Weights stored in reverse so the history sums run forward in j:
  // rev_b[N-1-m] = (m+1)^a - m^a,  rev_a[N-1-m] = second difference at m.
  std::vector<double> rev_b(N), rev_a(N);
  for (std::size_t m = 0; m < N; ++m) {
    rev_b[N - 1 - m] = detail::power_first_difference(m, alpha);
    rev_a[N - 1 - m] = config.corrector_enabled ? detail::power_second_difference(m, alpha + 1.0) : 0.0;
  }

  // Cached f(t_j, x_j), component-major.
  std::vector<std::vector<double>> history(dim, std::vector<double>(N + 1));
  const std::vector<double>& x0 = spec.initial_state;
  std::vector<double> f_now(dim), predicted(dim), f_pred(dim), next(dim);

  Trajectory traj(dim, h);
  traj.push(0.0, x0);
  rhs(0.0, x0, f_now);
  if (!detail::all_finite(f_now)) {
    traj.set_termination({Status::NonFinite, 0, 0});
    return traj;
  }
  for (std::size_t i = 0; i < dim; ++i) history[i][0] = f_now[i];

  for (std::size_t n = 0; n < N; ++n) {
    const std::size_t offset = N - 1 - n;
    for (std::size_t i = 0; i < dim; ++i) {
      predicted[i] = x0[i] + predictor_scale * detail::dot(rev_b.data() + offset, history[i].data(), n + 1);
    }
    const double t_next = static_cast<double>(n + 1) * h;
    if (config.corrector_enabled) {
      rhs(t_next, predicted, f_pred);
      const double a_first = detail::corrector_weight_first(n, alpha);
      for (std::size_t i = 0; i < dim; ++i) {
        const double tail = n == 0 ? 0.0 : detail::dot(rev_a.data() + offset + 1, history[i].data() + 1, n);
        next[i] = x0[i] + corrector_scale * (a_first * history[i][0] + tail + f_pred[i]);
      }
    } else {
      next = predicted;
    }

    if (!detail::all_finite(next)) {
      traj.set_termination({Status::NonFinite, n + 1, 0});
      return traj;
    }
    traj.push(t_next, next);
    for (std::size_t i = 0; i < dim; ++i) {
      if (std::abs(next[i]) > config.overflow_threshold) {
        traj.set_termination({Status::Overflowed, n + 1, i});
        return traj;
      }
    }
    rhs(t_next, next, f_now);
    if (!detail::all_finite(f_now)) {
      traj.set_termination({Status::NonFinite, n + 1, 0});
      return traj;
    }
    for (std::size_t i = 0; i < dim; ++i) history[i][n + 1] = f_now[i];
  }
  traj.set_termination({Status::Completed, N, 0});
  return traj;
}

/// L1 discrete Caputo derivative of uniformly sampled u_0..u_M.
///
/// Entry n-1 of the result approximates D^alpha u(t_n), n = 1..M, from the
/// piecewise-linear interpolant; exact for affine u up to roundoff.
inline std::vector<double> l1_caputo(std::span<const double> samples, double alpha, double h) {
  if (samples.size() < 2) throw domain_error("l1_caputo: need at least 2 samples");
  if (!(alpha > 0.0 && alpha < 1.0)) throw domain_error("l1_caputo: alpha must lie in (0, 1)");
  if (!(h > 0.0)) throw domain_error("l1_caputo: h must be > 0");
  const std::size_t M = samples.size() - 1;
  const double beta = 1.0 - alpha;
  // weight for lag m = n-1-k: (m+1)^beta - m^beta
  std::vector<double> w(M);
  for (std::size_t m = 0; m < M; ++m) w[m] = detail::power_first_difference(m, beta);
  std::vector<double> diffs(M);
  for (std::size_t k = 0; k < M; ++k) diffs[k] = samples[k + 1] - samples[k];
  const double scale = std::pow(h, -alpha) * reciprocal_gamma(2.0 - alpha);
  std::vector<double> out(M);
  for (std::size_t n = 1; n <= M; ++n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += w[n - 1 - k] * diffs[k];
    out[n - 1] = scale * acc;
  }
  return out;
}

}  // namespace fracburst
