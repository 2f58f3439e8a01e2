#pragma once

// Gamma-family and Mittag-Leffler evaluations in double precision.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "fracburst/error.hpp"

namespace fracburst {

/// Truncation control for the Mittag-Leffler power series.
class SeriesPolicy {
public:
  SeriesPolicy() = default;

  SeriesPolicy(double rel_tol, int max_terms) : rel_tol_(rel_tol), max_terms_(max_terms) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
      throw domain_error("SeriesPolicy: rel_tol must lie in (0, 1)");
    }
    if (max_terms < 16) {
      throw domain_error("SeriesPolicy: max_terms must be at least 16");
    }
  }

  double rel_tol() const noexcept { return rel_tol_; }
  int max_terms() const noexcept { return max_terms_; }

private:
  double rel_tol_ = 1e-15;
  int max_terms_ = 2000;
};

namespace detail {

inline constexpr double kEulerGamma = 0.577215664901532860607;

// (-1)^k zeta(k) / k, k = 2, 3, ...  (ln Gamma(1 + z) = -gamma z + sum c_k z^k)
inline constexpr std::array<double, 56> kLnGammaAt1{
    8.22467033424113218236e-1, -4.00685634386531428467e-1, 2.70580808427784547879e-1,
    -2.07385551028673985266e-1, 1.69557176997408189952e-1, -1.4404989676884611812e-1,
    1.25509669524743042422e-1, -1.11334265869564690491e-1, 1.00099457512781808534e-1,
    -9.09540171458290422326e-2, 8.33538405461090040249e-2, -7.69325164113521914728e-2,
    7.14329462953613360592e-2, -6.66687058824204680329e-2, 6.2500955141213040742e-2,
    -5.8823978658684582339e-2, 5.55557676274036111022e-2, -5.26316793796166607336e-2,
    5.00000476981016936398e-2, -4.76190703301422279908e-2, 4.54545562932046694424e-2,
    -4.34782660530402593614e-2, 4.16666691503412104691e-2, -4.00000011921401405861e-2,
    3.84615390346751857063e-2, -3.70370373129893255495e-2, 3.57142858473333580282e-2,
    -3.44827586849193008108e-2, 3.33333333643775810807e-2, -3.22580645311504163388e-2,
    3.12500000072759744802e-2, -3.03030303065580455069e-2, 2.94117647075943447317e-2,
    -2.85714285722601100127e-2, 2.77777777781819978303e-2, -2.70270270272236745901e-2,
    2.63157894737799468302e-2, -2.56410256410722817859e-2, 2.50000000000227373696e-2,
    -2.43902439024501157897e-2, 2.3809523809529223183e-2, -2.3255813953491015973e-2,
    2.27272727272740191686e-2, -2.22222222222228538158e-2, 2.17391304347829176273e-2,
    -2.12765957446810022431e-2, 2.08333333333334073482e-2, -2.04081632653061587012e-2,
    2.00000000000000177636e-2, -1.96078431372549106684e-2, 1.92307692307692350393e-2,
    -1.88679245283018888872e-2, 1.85185185185185195465e-2, -1.81818181818181823228e-2,
    1.78571428571428573907e-2, -1.75438596491228071393e-2,
};

// (-1)^k (zeta(k) - 1) / k, k = 2, 3, ...  (ln Gamma(2 + z) = (1 - gamma) z + sum c_k z^k)
inline constexpr std::array<double, 30> kLnGammaAt2{
    3.22467033424113218236e-1, -6.73523010531980951332e-2, 2.0580808427784547879e-2,
    -7.38555102867398526627e-3, 2.89051033074152328575e-3, -1.19275391170326097711e-3,
    5.09669524743042422336e-4, -2.23154758453579379761e-4, 9.94575127818085337146e-5,
    -4.49262367381331417002e-5, 2.05072127756706915532e-5, -9.43948827526839590399e-6,
    4.37486678990748780418e-6, -2.03921575380136623678e-6, 9.55141213040741983286e-7,
    -4.49246919876456604329e-7, 2.12071848055546658692e-7, -1.00432248239680996087e-7,
    4.76981016936398056576e-8, -2.27110946089431649103e-8, 1.08386592148969540911e-8,
    -5.18347504197004665512e-9, 2.48367454380247831719e-9, -1.19214014058609120744e-9,
    5.73136724167886201333e-10, -2.75952288512423314518e-10, 1.33047643742444894815e-10,
    -6.42296456383810002208e-11, 3.10442477473222727624e-11, -1.50213840807541421709e-11,
};

template <std::size_t N>
double taylor_tail(const std::array<double, N>& coeffs, double z) {
  // sum_{k>=2} coeffs[k-2] z^k by Horner.
  double acc = 0.0;
  for (std::size_t i = N; i-- > 0;) {
    acc = acc * z + coeffs[i];
  }
  return acc * z * z;
}

inline double ln_gamma_stirling(double x) {
  static constexpr std::array<double, 8> c{
      1.0 / 12.0,   -1.0 / 360.0,       1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0, -691.0 / 360360.0,  1.0 / 156.0,  -3617.0 / 122400.0};
  const double z = 1.0 / (x * x);
  double sum = c[7];
  for (int i = 6; i >= 0; --i) {
    sum = sum * z + c[i];
  }
  constexpr double half_ln_two_pi = 0.918938533204672741780329736406;
  return (x - 0.5) * std::log(x) - x + half_ln_two_pi + sum / x;
}

// sin(pi x) with exact zeros at the integers.
inline double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r > 1.0) return -std::sin(std::numbers::pi * (r - 1.0));
  return std::sin(std::numbers::pi * r);
}

}  // namespace detail

/// ln Gamma(x) for x > 0.
///
/// Taylor expansions about 1 and 2 cover [0.5, 2.5] (so the zeros of ln Gamma
/// keep full relative accuracy), the recurrence maps (0, 0.5) and [2.5, 15)
/// onto that window, and the Stirling series handles x >= 15.
inline double ln_gamma(double x) {
  if (!(x > 0.0) || std::isinf(x)) {
    if (x == std::numeric_limits<double>::infinity()) return x;
    std::ostringstream os;
    os << "ln_gamma: argument must be positive, got " << x;
    throw domain_error(os.str());
  }
  if (x < 0.5) {
    return ln_gamma(x + 1.0) - std::log(x);
  }
  if (x <= 1.5) {
    const double z = x - 1.0;
    return -detail::kEulerGamma * z + detail::taylor_tail(detail::kLnGammaAt1, z);
  }
  if (x <= 2.5) {
    const double z = x - 2.0;
    return (1.0 - detail::kEulerGamma) * z + detail::taylor_tail(detail::kLnGammaAt2, z);
  }
  if (x < 15.0) {
    double product = 1.0;
    double y = x;
    while (y > 2.5) {
      y -= 1.0;
      product *= y;
    }
    return ln_gamma(y) + std::log(product);
  }
  return detail::ln_gamma_stirling(x);
}

/// Gamma(x) for x > 0; overflow is an error, never +inf.
inline double gamma(double x) {
  const double lg = ln_gamma(x);
  if (lg > std::log(std::numeric_limits<double>::max())) {
    std::ostringstream os;
    os << "gamma: Gamma(" << x << ") exceeds the largest finite double";
    throw overflow_error(os.str());
  }
  return std::exp(lg);
}

/// 1 / Gamma(x) for any real x, zero at the poles (non-positive integers).
inline double reciprocal_gamma(double x) {
  if (x > 0.0) {
    return std::exp(-ln_gamma(x));
  }
  const double s = detail::sin_pi(x);
  if (s == 0.0) {
    return 0.0;
  }
  // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi.
  const double magnitude = std::exp(ln_gamma(1.0 - x) + std::log(std::abs(s)) - std::log(std::numbers::pi));
  return s < 0.0 ? -magnitude : magnitude;
}

/// Outcome of a truncated power-series evaluation.
struct SeriesSum {
  double value = 0.0;
  /// sum of |term|; abs_sum / |value| is the cancellation factor.
  double abs_sum = 0.0;
  int terms = 0;
};

/// Direct Taylor summation of E_{alpha,beta}(t) = sum_k t^k / Gamma(alpha k + beta).
///
/// Stops once two consecutive terms fall below rel_tol * |partial sum|; terms
/// sitting on a Gamma pole contribute zero and never trigger the stop.
inline SeriesSum mittag_leffler_series(double alpha, double beta, double t, const SeriesPolicy& policy = {}) {
  if (!(alpha > 0.0)) {
    throw domain_error("mittag_leffler: alpha must be positive");
  }
  SeriesSum out;
  if (t == 0.0) {
    out.value = reciprocal_gamma(beta);
    out.abs_sum = std::abs(out.value);
    out.terms = 1;
    return out;
  }
  const double ln_abs_t = std::log(std::abs(t));
  int quiet = 0;
  for (int k = 0; k < policy.max_terms(); ++k) {
    const double arg = alpha * k + beta;
    double term;
    if (arg > 0.0) {
      term = std::exp(k * ln_abs_t - ln_gamma(arg));
      if (t < 0.0 && (k % 2) == 1) term = -term;
    } else {
      term = std::pow(t, k) * reciprocal_gamma(arg);
    }
    out.value += term;
    out.abs_sum += std::abs(term);
    out.terms = k + 1;
    if (!std::isfinite(out.value)) {
      throw overflow_error("mittag_leffler: partial sum is not finite");
    }
    if (arg > 0.0 && k > 0 && std::abs(term) <= policy.rel_tol() * std::abs(out.value)) {
      if (++quiet == 2) return out;
    } else {
      quiet = 0;
    }
  }
  std::ostringstream os;
  os << "mittag_leffler: series for E_{" << alpha << "," << beta << "}(" << t << ") did not converge within "
     << policy.max_terms() << " terms";
  throw convergence_error(os.str());
}

namespace detail {

// Largest tolerated ratio sum|term| / |sum| before a negative-argument series
// result is replaced by the integral representation.
inline constexpr double kMaxSeriesCancellation = 64.0;
// Beyond this ratio the series is rejected outright (fewer than ~8 digits left).
inline constexpr double kMaxUnguardedCancellation = 1e6;

// E_{alpha,beta}(-x), x > 0, 0 < alpha < 1, 0 < beta <= 1, from the Laplace
// inversion along the branch cut:
//   E(-x) = tau^{1-beta}/(alpha pi) int_0^inf exp(-tau s^{1/alpha}) s^{(1-beta)/alpha}
//           (s sin(beta pi) + sin((beta-alpha) pi)) / (s^2 + 2 s cos(alpha pi) + 1) ds
// with tau = x^{1/alpha}.
inline double mittag_leffler_branch_cut(double alpha, double beta, double x) {
  const double tau = std::pow(x, 1.0 / alpha);
  const double sin_b = sin_pi(beta);
  const double sin_ba = sin_pi(beta - alpha);
  const double cos_a = std::cos(std::numbers::pi * alpha);
  const double power = (1.0 - beta) / alpha;
  auto integrand = [&](double s) {
    const double ln_s = std::log(s);
    double exponent = -tau * std::exp(ln_s / alpha);
    if (power != 0.0) exponent += power * ln_s;
    const double weight = std::exp(exponent);
    if (weight == 0.0) return 0.0;
    return weight * (s * sin_b + sin_ba) / (s * s + 2.0 * s * cos_a + 1.0);
  };
  boost::math::quadrature::exp_sinh<double> integrator;
  const double integral = integrator.integrate(integrand, 1e-14);
  return std::pow(tau, 1.0 - beta) * integral / (alpha * std::numbers::pi);
}

inline double mittag_leffler_negative_axis(double alpha, double beta, double x) {
  if (beta > 1.0) {
    // E_{a,b}(z) = (E_{a,b-a}(z) - 1/Gamma(b-a)) / z
    return (mittag_leffler_negative_axis(alpha, beta - alpha, x) - reciprocal_gamma(beta - alpha)) / -x;
  }
  return mittag_leffler_branch_cut(alpha, beta, x);
}

}  // namespace detail

/// E_{alpha,beta}(t).
///
/// Taylor summation whenever it is accurate. On the negative axis the series
/// cancels catastrophically once |t|^{1/alpha} grows; there the value comes
/// from the branch-cut integral (0 < alpha < 1, beta > 0) or from exp(t) for
/// alpha = beta = 1. Any other case the series cannot resolve is a
/// convergence_error.
inline double mittag_leffler(double alpha, double beta, double t, const SeriesPolicy& policy = {}) {
  if (!(alpha > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta) || std::isnan(t)) {
    throw domain_error("mittag_leffler: alpha must be positive and all arguments finite");
  }
  const bool has_fallback = t < 0.0 && ((alpha < 1.0 && beta > 0.0) || (alpha == 1.0 && beta == 1.0));
  if (!has_fallback) {
    const SeriesSum s = mittag_leffler_series(alpha, beta, t, policy);
    if (t < 0.0 && s.abs_sum > detail::kMaxUnguardedCancellation * std::abs(s.value)) {
      std::ostringstream os;
      os << "mittag_leffler: cancellation in the series for E_{" << alpha << "," << beta << "}(" << t
         << ") exceeds double precision";
      throw convergence_error(os.str());
    }
    return s.value;
  }
  try {
    const SeriesSum s = mittag_leffler_series(alpha, beta, t, policy);
    if (s.abs_sum <= detail::kMaxSeriesCancellation * std::abs(s.value)) {
      return s.value;
    }
  } catch (const convergence_error&) {
  } catch (const overflow_error&) {
  }
  if (alpha == 1.0) {
    return std::exp(t);
  }
  return detail::mittag_leffler_negative_axis(alpha, beta, -t);
}

/// (a - t)^{alpha-1} E_{alpha,alpha}(lambda (a - t)^alpha), t < a.
inline double e_alpha_kernel(double alpha, double lambda, double a, double t, const SeriesPolicy& policy = {}) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw domain_error("e_alpha_kernel: alpha must lie in (0, 1]");
  }
  if (!(t < a)) {
    throw domain_error("e_alpha_kernel: requires t < a");
  }
  const double gap = a - t;
  return std::pow(gap, alpha - 1.0) * mittag_leffler(alpha, alpha, lambda * std::pow(gap, alpha), policy);
}

}  // namespace fracburst
