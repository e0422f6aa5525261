#pragma once

#include <cmath>
#include <functional>

namespace hsres {

struct ScalarOptimum {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi]. Stops
/// when the bracket is narrower than `tol * (1 + |x|)`.
inline ScalarOptimum golden_section_maximize(const std::function<double(double)>& f, double lo,
                                             double hi, double tol = 1e-12, int max_iter = 400) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  for (; it < max_iter && (b - a) > tol * (1.0 + std::abs(c)); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  // The endpoints are candidates too: monotone objectives peak on the boundary.
  ScalarOptimum best{fc >= fd ? c : d, fc >= fd ? fc : fd, it};
  for (double edge : {lo, hi}) {
    const double fe = f(edge);
    if (fe > best.value) best = {edge, fe, it};
  }
  return best;
}

}  // namespace hsres
