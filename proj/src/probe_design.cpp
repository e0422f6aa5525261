#include "hsres/probe_design.hpp"

#include <algorithm>
#include <cmath>

#include "hsres/error.hpp"
#include "hsres/measures.hpp"
#include "hsres/random.hpp"

namespace hsres {

GeneratorOptimum optimum_pure_generator(const DensityMatrix& rho) {
  const Spectrum s = eigendecompose(rho);
  const Index d = s.values.size();
  GeneratorOptimum out;
  out.r_max = s.values[0];
  out.r_min = s.values[d - 1];
  if (out.r_max - out.r_min <= kDegenerateSpread) return out;

  // First column of each degenerate extreme subspace, in Spectrum order.
  const ComplexVector psi = (s.vectors.col(0) + s.vectors.col(d - 1)) / std::sqrt(2.0);
  Observable g(psi * psi.adjoint());
  out.lambda_sq = lambda_sq(rho, g);
  out.generator = std::move(g);
  return out;
}

OptimalityReport verify_generator_optimality(const DensityMatrix& rho, int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("verify_generator_optimality: trials must be >= 1");
  OptimalityReport rep;
  rep.trials = trials;
  rep.optimum = optimum_pure_generator(rho).lambda_sq;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const ComplexVector phi = random_unit_vector(rho.dim(), rng);
    const double v = lambda_sq(rho, Observable(phi * phi.adjoint()));
    rep.max_observed = std::max(rep.max_observed, v);
    if (v > rep.optimum + 1e-9) ++rep.violations;
  }
  rep.margin = rep.optimum - rep.max_observed;
  return rep;
}

namespace {
void check_two_level_domain(double q, Complex mu) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("two-level probe: require 0 <= q <= 1");
  if (!(std::abs(mu) <= 1.0)) throw DomainError("two-level probe: require |mu| <= 1");
}
}  // namespace

double two_level_lambda(double q, Complex mu, double g1, double g2) {
  check_two_level_domain(q, mu);
  const double gap = g1 - g2;
  return q * (1.0 - q) * gap * gap * std::norm(mu);
}

DensityMatrix two_level_state(double q, Complex mu) {
  check_two_level_domain(q, mu);
  const double c = std::sqrt(q * (1.0 - q));
  ComplexMatrix m(2, 2);
  m << q, mu * c, std::conj(mu) * c, 1.0 - q;
  return DensityMatrix(std::move(m));
}

}  // namespace hsres
