#pragma once

// Distinguishability measures between a probe and its signal-shifted copy,
// and the resolution functionals derived from them. Several functionals have
// more than one implementation (trace, commutator and spectral forms); they
// are kept separate so each can check the others.

#include "hsres/hermitian.hpp"

namespace hsres {

/// Lambda^2 alongside the variance that bounds it.
struct ResolutionReport {
  double lambda_sq = 0.0;
  double variance = 0.0;
  double ratio = 1.0;  ///< lambda_sq / variance, with 0/0 taken as 1
};

/// exp(i chi G) rho exp(-i chi G).
DensityMatrix evolve(const DensityMatrix& rho, const Observable& g, double chi);

/// tr[(rho1 - rho2)^2].
double hs_distance_sq(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// tr(A^2 B^2) - tr(ABAB) for any pair of Hermitian operators; the functional
/// is symmetric in its arguments.
double lambda_sq(const Observable& a, const Observable& b);

/// Probe-generator functional tr(rho^2 G^2) - tr(rho G rho G).
double lambda_sq(const DensityMatrix& rho, const Observable& g);

/// 1/2 sum_jk (g_j - g_k)^2 |<g_k|rho|g_j>|^2 over the spectrum of G.
double lambda_sq_spectral_g(const DensityMatrix& rho, const Observable& g);

/// 1/2 sum_jk (r_j - r_k)^2 |<r_k|G|r_j>|^2 over the spectrum of rho.
double lambda_sq_spectral_rho(const DensityMatrix& rho, const Observable& g);

/// -1/2 tr([rho, G]^2).
double lambda_sq_commutator(const DensityMatrix& rho, const Observable& g);

/// d_HS^2(chi) / (2 chi^2 Lambda^2); tends to 1 as chi -> 0. Throws
/// DomainError when chi == 0 or when rho is invariant under G.
double small_signal_ratio(const DensityMatrix& rho, const Observable& g, double chi);

/// tr(rho G^2) - tr(rho G)^2.
double variance(const DensityMatrix& rho, const Observable& g);

ResolutionReport resolution(const DensityMatrix& rho, const Observable& g);

/// 1/2 sum_jk (g_j + g_k)^2 |<g_k|rho|g_j>|^2.
double tilde_lambda_sq(const DensityMatrix& rho, const Observable& g);

/// Eigenvalue-pair sums r_j + r_k at or below this are dropped from the
/// Fisher information.
inline constexpr double kFisherPairCut = 1e-12;

/// 1/2 sum_{jk} (r_j - r_k)^2 / (r_j + r_k) |<r_j|G|r_k>|^2.
double fisher_info(const DensityMatrix& rho, const Observable& g);

/// 2 {1 - tr[(sqrt(rho1) rho2 sqrt(rho1))^{1/2}]}.
double bures_distance_sq(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// tr[(sqrt(rho1) - sqrt(rho2))^2].
double hellinger_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Wigner-Yanase skew information Lambda^2(sqrt(rho), G) = tr(rho G^2) - tr(sqrt(rho) G sqrt(rho) G).
double skew_info(const DensityMatrix& rho, const Observable& g);

/// Root fidelity tr[(sqrt(rho1) rho2 sqrt(rho1))^{1/2}].
double root_fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// The two-level probe diag(0.75, 0.25) against the skew-information
/// inequality 4 I_W(rho,sx) I_W(rho,sy) >= |tr(rho [sx, sy])|^2.
struct CounterexampleReport {
  double skew_x = 0.0;
  double skew_y = 0.0;
  double left = 0.0;   ///< 4 I_W(rho, sx) I_W(rho, sy)
  double right = 0.0;  ///< |tr(rho [sx, sy])|^2
  bool violated = false;
};
CounterexampleReport counterexample_check();

/// Pauli matrices.
Observable pauli_x();
Observable pauli_y();
Observable pauli_z();

}  // namespace hsres
