#pragma once

// Generators that maximize resolution for a fixed probe, and the closed form
// of Lambda^2 for a qubit probe.

#include <cstdint>
#include <optional>

#include "hsres/hermitian.hpp"

namespace hsres {

struct GeneratorOptimum {
  /// |psi><psi| with |psi> = (|r_max> + |r_min>)/sqrt(2); empty when every
  /// eigenvalue of rho coincides.
  std::optional<Observable> generator;
  double lambda_sq = 0.0;
  double r_max = 0.0;
  double r_min = 0.0;
};

/// Extremes closer than this are treated as a fully degenerate spectrum.
inline constexpr double kDegenerateSpread = 1e-10;

GeneratorOptimum optimum_pure_generator(const DensityMatrix& rho);

struct OptimalityReport {
  double optimum = 0.0;       ///< Lambda^2 of the constructed generator
  double max_observed = 0.0;  ///< best random pure-projector generator
  double margin = 0.0;        ///< optimum - max_observed
  int trials = 0;
  int violations = 0;         ///< candidates beating the optimum by > 1e-9
};

/// Compare the constructed optimum with `trials` Haar-random pure-projector
/// generators. Throws DomainError if trials < 1.
OptimalityReport verify_generator_optimality(const DensityMatrix& rho, int trials,
                                             std::uint64_t seed = 2024);

/// q(1-q)(g1-g2)^2 |mu|^2 for rho = [[q, mu sqrt(q(1-q))], [mu* sqrt(q(1-q)), 1-q]]
/// and G = diag(g1, g2). Throws DomainError outside 0 <= q <= 1, |mu| <= 1.
double two_level_lambda(double q, Complex mu, double g1, double g2);

/// The qubit probe parametrized as above.
DensityMatrix two_level_state(double q, Complex mu);

}  // namespace hsres
