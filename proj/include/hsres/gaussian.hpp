#pragma once

// Closed forms for Gaussian probes whose Wigner function is axis-aligned in
// the (X, Y) plane: exact Hilbert-Schmidt distances under displacement and
// phase rotation, their small-signal Lambda^2 limits, and the best probes at
// a fixed mean photon number.

#include "hsres/hermitian.hpp"

namespace hsres {

/// Means and standard deviations of the X and Y quadratures.
class AxisAlignedGaussian {
 public:
  /// Throws DomainError unless dx, dy > 0 and dx * dy >= 1/2.
  AxisAlignedGaussian(double mean_x, double mean_y, double dx, double dy);

  static AxisAlignedGaussian vacuum();
  static AxisAlignedGaussian coherent(Complex alpha);
  /// r > 0 squeezes Y.
  static AxisAlignedGaussian squeezed_vacuum(double r);
  static AxisAlignedGaussian thermal(double xi);

  double mean_x() const noexcept { return mean_x_; }
  double mean_y() const noexcept { return mean_y_; }
  double dx() const noexcept { return dx_; }
  double dy() const noexcept { return dy_; }
  /// dX dY; tr(rho^2) = 1/(2p).
  double purity_factor() const noexcept { return dx_ * dy_; }

 private:
  double mean_x_;
  double mean_y_;
  double dx_;
  double dy_;
};

/// (dX^2 + dY^2 + <X>^2 + <Y>^2 - 1) / 2.
double mean_photon(const AxisAlignedGaussian& g);

/// Exact d_HS^2 between the probe and its copy displaced along Y by chi.
double hs_displacement(const AxisAlignedGaussian& g, double chi);

/// 1 / (8 dX dY^3).
double lambda_x_gauss(const AxisAlignedGaussian& g);

/// 1 / (8 dY dX^3).
double lambda_y_gauss(const AxisAlignedGaussian& g);

/// Exact d_HS^2 between the probe and its copy rotated by chi in phase
/// space. Requires <Y> = 0.
double hs_phase(const AxisAlignedGaussian& g, double chi);

/// Small-rotation limit of hs_phase / (2 chi^2):
///   ([dX^2 - dY^2]^2 + 2 <X>^2 dX^2) / (16 dX^3 dY^3).
/// Requires <Y> = 0.
double lambda_n_gauss(const AxisAlignedGaussian& g);

struct GaussianOptimum {
  AxisAlignedGaussian state;
  double lambda_sq;            ///< objective at `state`
  double analytic_lambda_sq;   ///< closed-form optimum (pure, undisplaced)
  double grid_lambda_sq;       ///< best value on the coarse grid
  AxisAlignedGaussian analytic_state;
};

/// Side of the coarse grid used before golden-section refinement.
inline constexpr int kOptimizerGrid = 200;

/// Maximize lambda_x_gauss subject to mean_photon == n. Throws DomainError
/// for n <= 0.
GaussianOptimum optimize_displacement(double n);

/// Maximize lambda_n_gauss over <Y> = 0 probes with mean_photon == n.
/// Throws DomainError for n <= 0.
GaussianOptimum optimize_phase(double n);

}  // namespace hsres
