#pragma once

// Test-only oracles and helpers. Nothing here calls into the code paths it
// is used to check.

#include <cmath>
#include <complex>

#include "hsres/hermitian.hpp"

namespace hsres::testing {

/// Direct product then trace; no contraction tricks.
inline Complex naive_trace_product(std::initializer_list<ComplexMatrix> ms) {
  auto it = ms.begin();
  ComplexMatrix acc = *it;
  for (++it; it != ms.end(); ++it) acc = acc * (*it);
  return acc.trace();
}

/// tr(rho^2 G^2) - tr(rho G rho G) by explicit matrix products.
inline double naive_lambda_sq(const ComplexMatrix& rho, const ComplexMatrix& g) {
  return (naive_trace_product({rho, rho, g, g}) - naive_trace_product({rho, g, rho, g})).real();
}

inline double naive_variance(const ComplexMatrix& rho, const ComplexMatrix& g) {
  const double m = (rho * g).trace().real();
  return (rho * g * g).trace().real() - m * m;
}

/// Closed-form eigenpairs of a 2x2 Hermitian [[a, b], [conj(b), d]],
/// descending.
struct TwoByTwo {
  double hi, lo;
  ComplexVector v_hi, v_lo;
};
inline TwoByTwo eig2(const ComplexMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const Complex b = m(0, 1);
  const double mid = 0.5 * (a + d);
  const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  TwoByTwo out{mid + rad, mid - rad, ComplexVector(2), ComplexVector(2)};
  auto vec = [&](double lam) {
    ComplexVector v(2);
    if (std::abs(b) > 1e-300) {
      v << b, lam - a;
    } else {
      v << (std::abs(lam - a) < std::abs(lam - d) ? 1.0 : 0.0), (std::abs(lam - a) < std::abs(lam - d) ? 0.0 : 1.0);
    }
    return ComplexVector(v / v.norm());
  };
  out.v_hi = vec(out.hi);
  out.v_lo = vec(out.lo);
  return out;
}

inline double max_entry(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

/// Independent Fock-basis factorials via lgamma.
inline double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace hsres::testing
