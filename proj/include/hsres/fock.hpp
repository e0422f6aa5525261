#pragma once

// Truncated single- and two-mode Fock spaces: ladder operators, quadratures
// and builders for the Gaussian probe families, each reporting how much
// probability was lost to the cutoff.

#include "hsres/hermitian.hpp"

namespace hsres {

/// Number basis |0>, ..., |cutoff-1>.
class FockSpace {
 public:
  explicit FockSpace(Index cutoff);
  Index cutoff() const noexcept { return cutoff_; }
  Index dim() const noexcept { return cutoff_; }

 private:
  Index cutoff_;
};

struct TruncationReport {
  double trace_deficit = 0.0;  ///< mass above the cutoff before renormalization
  bool renormalized = false;
};

struct FockState {
  DensityMatrix rho;
  TruncationReport truncation;
};

/// Builders refuse to return states that lost more than this to truncation.
inline constexpr double kMaxTraceDeficit = 1e-6;

ComplexMatrix annihilation(const FockSpace& space);
ComplexMatrix creation(const FockSpace& space);
Observable number_operator(const FockSpace& space);

struct Quadratures {
  Observable x;  ///< (a + a^dagger)/sqrt(2)
  Observable y;  ///< i(a^dagger - a)/sqrt(2)
};
Quadratures quadratures(const FockSpace& space);

/// Truncated, unnormalized coherent amplitudes e^{-|a|^2/2} a^n / sqrt(n!).
ComplexVector coherent_amplitudes(Complex alpha, Index cutoff);

FockState coherent_state(Complex alpha, const FockSpace& space);

/// Pure squeezed vacuum. r > 0 squeezes Y: (dX)^2 = e^{2r}/2, (dY)^2 = e^{-2r}/2.
FockState squeezed_vacuum(double r, const FockSpace& space);

/// (1 - xi) sum_n xi^n |n><n|, 0 <= xi < 1.
FockState thermal_state(double xi, const FockSpace& space);

/// Squeezed vacuum displaced to <X> = x0, <Y> = 0 by exp((x0/sqrt2)(a^dagger - a)).
FockState displaced_squeezed(double x0, double r, const FockSpace& space);

/// Axis-aligned Gaussian with the given quadrature means and standard
/// deviations (dx * dy >= 1/2): a displaced, squeezed thermal state.
FockState gaussian_state(double mean_x, double mean_y, double dx, double dy,
                         const FockSpace& space);

/// rho1 (x) rho2.
DensityMatrix two_mode(const DensityMatrix& rho1, const DensityMatrix& rho2,
                       Index max_dim = Tolerances{}.max_dim);

/// N (x) 1 - 1 (x) N.
Observable jz(const FockSpace& first, const FockSpace& second);

/// N (x) 1 + 1 (x) N.
Observable total_number(const FockSpace& first, const FockSpace& second);

/// max(20, ceil(<N> + 8 sqrt(<N> + 1) + 10)).
Index default_cutoff(double mean_photons);

// Family-aware cutoffs. Each starts from default_cutoff and grows until the
// family's truncation deficit drops below `target_deficit`.
FockSpace space_for_coherent(Complex alpha, double target_deficit = 1e-12);
FockSpace space_for_squeezed(double r, double target_deficit = 1e-12);
FockSpace space_for_thermal(double xi, double target_deficit = 1e-12);
FockSpace space_for_gaussian(double mean_x, double mean_y, double dx, double dy,
                             double target_deficit = 1e-11);

}  // namespace hsres
