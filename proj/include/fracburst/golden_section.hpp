#pragma once

#include <cmath>
#include <concepts>
#include <utility>

namespace fracburst {

struct GoldenSectionResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

/// Derivative-free minimization of a unimodal f on [lo, hi]; stops when the
/// bracket is narrower than `width`.
template <std::invocable<double> F>
GoldenSectionResult golden_section_minimize(F&& f, double lo, double hi, double width, int max_iterations = 400) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  if (lo > hi) std::swap(lo, hi);
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  for (; it < max_iterations && (hi - lo) > width; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  GoldenSectionResult out;
  out.iterations = it;
  if (fc <= fd) {
    out.x = c;
    out.fx = fc;
  } else {
    out.x = d;
    out.fx = fd;
  }
  return out;
}

}  // namespace fracburst
