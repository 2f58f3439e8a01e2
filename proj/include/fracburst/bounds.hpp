#pragma once

// Finite-time blow-up bounds: the scalar bound tau(u0, q, p) for
// D^alpha u >= K t^q u^p and the case analysis that reduces the two-component
// power-law system to it.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fracburst/error.hpp"
#include "fracburst/golden_section.hpp"
#include "fracburst/special_fn.hpp"

namespace fracburst {

struct ScalarBoundProblem {
  double alpha = 0.5;
  double u0 = 1.0;
  double q = 0.0;
  double p = 2.0;
};

struct LambdaBracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct BMinimum {
  double lambda_m = 0.0;
  double B_min = 0.0;
  double ln_B_min = 0.0;
  /// Search interval actually explored while bracketing.
  LambdaBracket bracket;
};

struct ScalarBoundResult {
  double tau_ub = 0.0;
  double lambda_m = 0.0;
  double B_min = 0.0;
  double ln_B_min = 0.0;
  LambdaBracket bracket;
};

/// Hoelder conjugate p / (p - 1).
inline double conjugate_index(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "conjugate_index: p must be > 1, got " << p;
    throw domain_error(os.str());
  }
  return p / (p - 1.0);
}

/// Left end of the domain of B: every Gamma argument is positive strictly above it.
inline double big_B_domain_floor(double alpha, double p_tilde, double q) {
  return std::max(alpha * p_tilde - 1.0, p_tilde * (q + alpha) - q - 2.0);
}

/// ln B(lambda), evaluated as a signed sum of ln Gamma terms.
inline double ln_big_B(double lambda, double alpha, double p_tilde, double q) {
  const double a1 = lambda + 1.0;
  const double a2 = lambda + 1.0 - alpha * p_tilde;
  const double a3 = q + lambda + 2.0;
  const double a4 = lambda + 1.0 - alpha;
  const double a5 = q + lambda + 2.0 - p_tilde * (q + alpha);
  if (!(a1 > 0.0 && a2 > 0.0 && a3 > 0.0 && a4 > 0.0 && a5 > 0.0)) {
    std::ostringstream os;
    os << "big_B: lambda = " << lambda << " lies outside the domain (lambda > "
       << big_B_domain_floor(alpha, p_tilde, q) << ")";
    throw domain_error(os.str());
  }
  return (p_tilde - 1.0) * ln_gamma(a1) + ln_gamma(a2) + ln_gamma(a3) - p_tilde * ln_gamma(a4) - ln_gamma(a5);
}

inline double big_B(double lambda, double alpha, double p_tilde, double q) {
  const double ln_value = ln_big_B(lambda, alpha, p_tilde, q);
  if (ln_value > std::log(std::numeric_limits<double>::max())) {
    std::ostringstream os;
    os << "big_B: B(" << lambda << ") exceeds the largest finite double";
    throw overflow_error(os.str());
  }
  return std::exp(ln_value);
}

namespace detail {

inline void require_admissible(double alpha, double p_tilde, double q, std::string_view who) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw domain_error(std::string(who) + ": alpha must lie in (0, 1)");
  }
  if (!(p_tilde > 1.0) || !std::isfinite(p_tilde)) {
    throw domain_error(std::string(who) + ": conjugate index must be finite and > 1");
  }
  if (!(q >= 0.0)) {
    throw domain_error(std::string(who) + ": q must be >= 0");
  }
  if (!(q + 1.0 > q * p_tilde)) {
    std::ostringstream os;
    os << who << ": inadmissible exponents, q + 1 = " << q + 1.0 << " is not > q * p_tilde = " << q * p_tilde;
    throw domain_error(os.str());
  }
}

}  // namespace detail

/// Minimizes B over lambda > alpha p_tilde - 1.
///
/// B blows up at the domain floor, so the search steps away from the floor at
/// geometrically growing offsets until B turns upward, refines the resulting
/// bracket by golden section, then checks the two-sided probe and a
/// log-spaced scan of the whole explored interval. Convexity of B is only
/// observed, so both checks stay on.
inline BMinimum minimize_big_B(double alpha, double p_tilde, double q) {
  detail::require_admissible(alpha, p_tilde, q, "minimize_big_B");
  constexpr double first_offset = 1e-6;
  constexpr double max_offset = 1e6;
  constexpr double bracket_width = 1e-10;
  constexpr double probe = 1e-6;

  const double floor = big_B_domain_floor(alpha, p_tilde, q);
  auto f = [&](double lambda) { return ln_big_B(lambda, alpha, p_tilde, q); };

  double x0 = floor + first_offset;
  double f0 = f(x0);
  double x1 = floor + 2.0 * first_offset;
  double f1 = f(x1);
  double lo = x0;
  double hi = x1;
  bool bracketed = false;
  if (f1 > f0) {
    // Minimum within 2e-6 of the floor.
    lo = floor + first_offset * 1e-3;
    hi = x1;
    bracketed = true;
  }
  double offset = 2.0 * first_offset;
  while (!bracketed) {
    offset *= 2.0;
    if (offset > max_offset) break;
    const double x2 = floor + offset;
    const double f2 = f(x2);
    if (f2 > f1) {
      lo = x0;
      hi = x2;
      bracketed = true;
      break;
    }
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
  }
  if (!bracketed) {
    std::ostringstream os;
    os << "minimize_big_B: B keeps decreasing up to lambda = " << floor + max_offset
       << "; no interior minimum (alpha=" << alpha << ", p_tilde=" << p_tilde << ", q=" << q << ")";
    throw bracketing_error(os.str());
  }
  const double explored_hi = hi;

  const GoldenSectionResult gs = golden_section_minimize(f, lo, hi, bracket_width);

  BMinimum out;
  out.lambda_m = gs.x;
  out.ln_B_min = gs.fx;
  out.bracket = {floor + first_offset, explored_hi};

  const double slack = 1e-14 * (1.0 + std::abs(gs.fx));
  if (f(gs.x - probe) < gs.fx - slack || f(gs.x + probe) < gs.fx - slack) {
    std::ostringstream os;
    os << "minimize_big_B: lambda = " << gs.x << " fails the local-minimum probe";
    throw bracketing_error(os.str());
  }
  const double span = explored_hi - floor;
  for (int k = 0; k < 100; ++k) {
    const double lambda = floor + first_offset * std::pow(span / first_offset, k / 99.0);
    if (lambda >= explored_hi) break;
    if (f(lambda) < gs.fx - slack) {
      std::ostringstream os;
      os << "minimize_big_B: scan found B(" << lambda << ") below the golden-section minimum at " << gs.x;
      throw bracketing_error(os.str());
    }
  }
  if (out.ln_B_min > std::log(std::numeric_limits<double>::max())) {
    throw overflow_error("minimize_big_B: minimum of B exceeds the largest finite double");
  }
  out.B_min = std::exp(out.ln_B_min);
  return out;
}

/// Upper bound on the blow-up time of D^alpha u >= K t^q u^p, u(0) = u0.
inline ScalarBoundResult tau_bound(const ScalarBoundProblem& problem) {
  const auto& [alpha, u0, q, p] = problem;
  if (!(u0 > 0.0) || !std::isfinite(u0)) {
    throw domain_error("tau_bound: u0 must be positive");
  }
  if (!(p >= 1.0)) {
    throw domain_error("tau_bound: p must be >= 1");
  }
  if (p == 1.0) {
    throw domain_error("tau_bound: p = 1 has no finite conjugate index");
  }
  const double p_tilde = conjugate_index(p);
  detail::require_admissible(alpha, p_tilde, q, "tau_bound");

  const BMinimum m = minimize_big_B(alpha, p_tilde, q);
  const double ln_tau =
      (ln_gamma(q * (1.0 - p_tilde) + 1.0) - p * std::log(u0) - ln_gamma(q + 1.0) + m.ln_B_min) /
      (p_tilde * (alpha + q));

  ScalarBoundResult out;
  out.tau_ub = std::exp(ln_tau);
  out.lambda_m = m.lambda_m;
  out.B_min = m.B_min;
  out.ln_B_min = m.ln_B_min;
  out.bracket = m.bracket;
  if (!(out.tau_ub > 0.0) || !std::isfinite(out.tau_ub)) {
    throw overflow_error("tau_bound: bound is not a finite positive number");
  }
  return out;
}

/// D^alpha x = t^q1 x^p11 y^p12,  D^alpha y = t^q2 y^p21 x^p22.
struct PowerLawParams {
  double alpha = 0.5;
  double q1 = 0.0;
  double q2 = 0.0;
  double p11 = 0.0;
  double p12 = 0.0;
  double p21 = 0.0;
  double p22 = 0.0;
  double x0 = 1.0;
  double y0 = 1.0;

  void validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw domain_error("PowerLawParams: alpha must lie in (0, 1)");
    for (double e : {q1, q2, p11, p12, p21, p22}) {
      if (!(e >= 0.0) || !std::isfinite(e)) throw domain_error("PowerLawParams: exponents must be finite and >= 0");
    }
    if (!(x0 > 0.0) || !(y0 > 0.0) || !std::isfinite(x0) || !std::isfinite(y0)) {
      throw domain_error("PowerLawParams: x0 and y0 must be positive");
    }
  }
};

enum class Branch { DistinctQ, EqualQBranch1, EqualQBranch2, EqualQBoth };

inline std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::DistinctQ: return "DISTINCT_Q";
    case Branch::EqualQBranch1: return "EQUAL_Q_BRANCH1";
    case Branch::EqualQBranch2: return "EQUAL_Q_BRANCH2";
    case Branch::EqualQBoth: return "EQUAL_Q_BOTH";
  }
  return "?";
}

/// Scalar reduction for one component: the system bound is tau(u0, q, p).
struct BranchBound {
  /// Bounded component j (1 = x, 2 = y); the other one is i = 3 - j.
  int j = 0;
  double gamma = 0.0;
  double p = 0.0;
  double p_tilde = 0.0;
  double u0 = 0.0;
  double q = 0.0;
  ScalarBoundResult scalar;
};

struct BoundCertificate {
  Branch branch = Branch::DistinctQ;
  /// One entry, or both branches for EqualQBoth.
  std::vector<BranchBound> branches;
  std::size_t selected = 0;
  double tau_ub = 0.0;

  const BranchBound& active() const { return branches.at(selected); }
};

namespace detail {

struct Term {
  const char* name;
  double value;
};

// Exponent roles when component j is bounded: the cross exponent of the
// other equation, the self exponent of equation j, and so on.
struct BranchExponents {
  Term cross_i;
  Term self_j;
  Term self_i;
  Term cross_j;
  const char* q_name;
  double q;
  double u0;
};

inline BranchExponents branch_exponents(const PowerLawParams& s, int j) {
  if (j == 2) {
    return {{"p12", s.p12}, {"p21", s.p21}, {"p11", s.p11}, {"p22", s.p22}, "q2", s.q2, s.y0};
  }
  return {{"p22", s.p22}, {"p11", s.p11}, {"p21", s.p21}, {"p12", s.p12}, "q1", s.q1, s.x0};
}

inline std::optional<BranchBound> try_branch(const PowerLawParams& s, int j, std::string_view label,
                                             std::vector<std::string>& violated) {
  const BranchExponents e = branch_exponents(s, j);
  const double gamma = (e.cross_i.value + 1.0 - e.self_j.value) / 2.0;
  const double p = e.self_j.value + e.cross_j.value * gamma;
  const std::size_t before = violated.size();

  auto note = [&](const std::string& what) {
    std::ostringstream os;
    os << label << ": " << what;
    violated.push_back(os.str());
  };
  if (!(e.cross_i.value >= 3.0 + e.self_j.value)) {
    std::ostringstream os;
    os << e.cross_i.name << " >= 3 + " << e.self_j.name << " fails (" << e.cross_i.value << " < "
       << 3.0 + e.self_j.value << ")";
    note(os.str());
  }
  if (!(e.self_i.value + 1.0 >= e.cross_j.value)) {
    std::ostringstream os;
    os << e.self_i.name << " + 1 >= " << e.cross_j.name << " fails (" << e.self_i.value + 1.0 << " < "
       << e.cross_j.value << ")";
    note(os.str());
  }
  double p_tilde = std::numeric_limits<double>::infinity();
  if (!(p > 1.0)) {
    std::ostringstream os;
    os << "p" << j << " = " << e.self_j.name << " + " << e.cross_j.name << " * gamma" << j << " = " << p
       << " must exceed 1 for a finite conjugate index";
    note(os.str());
  } else {
    p_tilde = conjugate_index(p);
    if (!(e.q + 1.0 > e.q * p_tilde)) {
      std::ostringstream os;
      os << e.q_name << " + 1 > " << e.q_name << " * p" << j << "~ fails (" << e.q + 1.0
         << " <= " << e.q * p_tilde << ")";
      note(os.str());
    }
  }
  if (violated.size() != before) return std::nullopt;

  BranchBound b;
  b.j = j;
  b.gamma = gamma;
  b.p = p;
  b.p_tilde = p_tilde;
  b.u0 = e.u0;
  b.q = e.q;
  b.scalar = tau_bound({s.alpha, e.u0, e.q, p});
  if (!(b.gamma >= 2.0)) {
    throw error("theorem_bound: internal invariant gamma_j >= 2 violated");
  }
  return b;
}

}  // namespace detail

/// Blow-up certificate for the power-law system.
///
/// q1 != q2 bounds the component j paired with the larger time exponent;
/// q1 == q2 (exact floating-point tie) tries both components and keeps the
/// smaller bound when both apply. Throws not_applicable_error listing every
/// violated hypothesis otherwise.
inline BoundCertificate theorem_bound(const PowerLawParams& params) {
  params.validate();
  std::vector<std::string> violated;
  BoundCertificate cert;
  if (params.q1 != params.q2) {
    const int i = params.q1 < params.q2 ? 1 : 2;
    const int j = 3 - i;
    std::ostringstream label;
    label << "q1 != q2, i=" << i << ", j=" << j;
    auto b = detail::try_branch(params, j, label.str(), violated);
    if (!b) throw not_applicable_error(std::move(violated));
    cert.branch = Branch::DistinctQ;
    cert.branches.push_back(*b);
  } else {
    auto b1 = detail::try_branch(params, 1, "q1 == q2, branch 1 (bound via x0)", violated);
    auto b2 = detail::try_branch(params, 2, "q1 == q2, branch 2 (bound via y0)", violated);
    if (b1 && b2) {
      cert.branch = Branch::EqualQBoth;
      cert.branches = {*b1, *b2};
      cert.selected = b2->scalar.tau_ub < b1->scalar.tau_ub ? 1 : 0;
    } else if (b1) {
      cert.branch = Branch::EqualQBranch1;
      cert.branches.push_back(*b1);
    } else if (b2) {
      cert.branch = Branch::EqualQBranch2;
      cert.branches.push_back(*b2);
    } else {
      throw not_applicable_error(std::move(violated));
    }
  }
  cert.tau_ub = cert.active().scalar.tau_ub;
  return cert;
}

}  // namespace fracburst
