#include "hsres/gaussian.hpp"

#include <cmath>
#include <sstream>

#include "hsres/error.hpp"
#include "hsres/optim.hpp"

namespace hsres {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2 = 0.7071067811865476;

void require_on_x_axis(const AxisAlignedGaussian& g, const char* what) {
  if (g.mean_y() != 0.0) throw DomainError(std::string(what) + ": requires <Y> = 0");
}

void require_positive_n(double n, const char* what) {
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError(std::string(what) + ": n must be positive");
}

// Roots of b^2 - s b + q = 0, i.e. the b range with b (s - b) >= q.
std::pair<double, double> product_interval(double s, double q) {
  const double disc = std::sqrt(std::max(0.0, s * s - 4.0 * q));
  return {(s - disc) / 2.0, (s + disc) / 2.0};
}

// Phase objective in terms of variances a = dX^2, b = dY^2.
double phase_objective(double x0_sq, double a, double b) {
  const double diff = a - b;
  return (diff * diff + 2.0 * x0_sq * a) / (16.0 * std::pow(a * b, 1.5));
}

}  // namespace

AxisAlignedGaussian::AxisAlignedGaussian(double mean_x, double mean_y, double dx, double dy)
    : mean_x_(mean_x), mean_y_(mean_y), dx_(dx), dy_(dy) {
  if (!std::isfinite(mean_x) || !std::isfinite(mean_y))
    throw DomainError("AxisAlignedGaussian: means must be finite");
  if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy))
    throw DomainError("AxisAlignedGaussian: widths must be positive");
  if (dx * dy < 0.5 - 1e-12) {
    std::ostringstream os;
    os << "AxisAlignedGaussian: dx*dy = " << dx * dy << " violates dx*dy >= 1/2";
    throw DomainError(os.str());
  }
}

AxisAlignedGaussian AxisAlignedGaussian::vacuum() {
  return {0.0, 0.0, kInvSqrt2, kInvSqrt2};
}

AxisAlignedGaussian AxisAlignedGaussian::coherent(Complex alpha) {
  return {kSqrt2 * alpha.real(), kSqrt2 * alpha.imag(), kInvSqrt2, kInvSqrt2};
}

AxisAlignedGaussian AxisAlignedGaussian::squeezed_vacuum(double r) {
  return {0.0, 0.0, kInvSqrt2 * std::exp(r), kInvSqrt2 * std::exp(-r)};
}

AxisAlignedGaussian AxisAlignedGaussian::thermal(double xi) {
  if (!(xi >= 0.0 && xi < 1.0)) throw DomainError("AxisAlignedGaussian::thermal: require 0 <= xi < 1");
  const double w = std::sqrt((1.0 + xi) / (2.0 * (1.0 - xi)));
  return {0.0, 0.0, w, w};
}

double mean_photon(const AxisAlignedGaussian& g) {
  return 0.5 * (g.dx() * g.dx() + g.dy() * g.dy() + g.mean_x() * g.mean_x() +
                g.mean_y() * g.mean_y() - 1.0);
}

double hs_displacement(const AxisAlignedGaussian& g, double chi) {
  const double dy2 = g.dy() * g.dy();
  return -std::expm1(-chi * chi / (4.0 * dy2)) / g.purity_factor();
}

double lambda_x_gauss(const AxisAlignedGaussian& g) {
  return 1.0 / (8.0 * g.dx() * std::pow(g.dy(), 3));
}

double lambda_y_gauss(const AxisAlignedGaussian& g) {
  return 1.0 / (8.0 * g.dy() * std::pow(g.dx(), 3));
}

double hs_phase(const AxisAlignedGaussian& g, double chi) {
  require_on_x_axis(g, "hs_phase");
  const double a = g.dx() * g.dx();
  const double b = g.dy() * g.dy();
  const double s = std::sin(chi / 2.0);
  const double c = std::cos(chi / 2.0);
  const double x0 = g.mean_x();
  const double exponent = -x0 * x0 * s * s / (a * s * s + b * c * c);
  const double spread = (a * a + b * b + 6.0 * a * b - (a - b) * (a - b) * std::cos(2.0 * chi)) / (8.0 * a * b);
  return (1.0 - std::exp(exponent) / std::sqrt(spread)) / g.purity_factor();
}

double lambda_n_gauss(const AxisAlignedGaussian& g) {
  require_on_x_axis(g, "lambda_n_gauss");
  return phase_objective(g.mean_x() * g.mean_x(), g.dx() * g.dx(), g.dy() * g.dy());
}

GaussianOptimum optimize_displacement(double n) {
  require_positive_n(n, "optimize_displacement");
  const double s = 2.0 * n + 1.0;  // dX^2 + dY^2 + <X>^2 + <Y>^2
  const double p_max = s / 2.0;

  // Objective 1/(8 p b) with p = dX dY and b = dY^2; feasible while the
  // variances leave a non-negative squared displacement.
  auto objective = [](double p, double b) { return 1.0 / (8.0 * p * b); };

  double best_p = 0.5;
  double best_b = 0.0;
  double best = -1.0;
  for (int i = 0; i < kOptimizerGrid; ++i) {
    const double p = 0.5 + (p_max - 0.5) * i / (kOptimizerGrid - 1);
    const auto [lo, hi] = product_interval(s, p * p);
    for (int j = 0; j < kOptimizerGrid; ++j) {
      const double b = lo + (hi - lo) * j / (kOptimizerGrid - 1);
      if (b <= 0.0) continue;
      const double v = objective(p, b);
      if (v > best) {
        best = v;
        best_p = p;
        best_b = b;
      }
    }
  }
  const double grid_best = best;

  const auto [blo, bhi] = product_interval(s, best_p * best_p);
  const ScalarOptimum rb = golden_section_maximize([&](double b) { return objective(best_p, b); }, blo, bhi);
  best_b = rb.x;
  const double p_hi = std::sqrt(std::max(0.25, best_b * (s - best_b)));
  const ScalarOptimum rp = golden_section_maximize([&](double p) { return objective(p, best_b); }, 0.5, p_hi);
  best_p = rp.x;

  const double dy = std::sqrt(best_b);
  const double dx = best_p / dy;
  const double mean_sq = std::max(0.0, s - dx * dx - dy * dy);
  const AxisAlignedGaussian found(std::sqrt(mean_sq), 0.0, dx, dy);

  const double b_star = product_interval(s, 0.25).first;
  const AxisAlignedGaussian analytic(0.0, 0.0, 0.5 / std::sqrt(b_star), std::sqrt(b_star));
  return {found, lambda_x_gauss(found), lambda_x_gauss(analytic), grid_best, analytic};
}

GaussianOptimum optimize_phase(double n) {
  require_positive_n(n, "optimize_phase");
  const double s = 2.0 * n + 1.0;

  // Variables: t = <X>^2 in [0, s - 1] and b = dY^2 such that
  // a = s - t - b satisfies a b >= 1/4.
  auto value = [s](double t, double b) {
    const double a = s - t - b;
    if (a <= 0.0 || b <= 0.0 || a * b < 0.25 - 1e-15) return -1.0;
    return phase_objective(t, a, b);
  };

  double best_t = 0.0;
  double best_b = 0.0;
  double best = -1.0;
  for (int i = 0; i < kOptimizerGrid; ++i) {
    const double t = (s - 1.0) * i / (kOptimizerGrid - 1);
    const auto [lo, hi] = product_interval(s - t, 0.25);
    for (int j = 0; j < kOptimizerGrid; ++j) {
      const double b = lo + (hi - lo) * j / (kOptimizerGrid - 1);
      const double v = value(t, b);
      if (v > best) {
        best = v;
        best_t = t;
        best_b = b;
      }
    }
  }
  const double grid_best = best;

  const auto [blo, bhi] = product_interval(s - best_t, 0.25);
  best_b = golden_section_maximize([&](double b) { return value(best_t, b); }, blo, bhi).x;
  const double t_hi = std::max(0.0, s - best_b - 0.25 / best_b);
  best_t = golden_section_maximize([&](double t) { return value(t, best_b); }, 0.0, t_hi).x;

  const double a = s - best_t - best_b;
  const AxisAlignedGaussian found(std::sqrt(best_t), 0.0, std::sqrt(a), std::sqrt(best_b));

  const auto [b_star, a_star] = product_interval(s, 0.25);
  const AxisAlignedGaussian analytic(0.0, 0.0, std::sqrt(a_star), std::sqrt(b_star));
  return {found, lambda_n_gauss(found), lambda_n_gauss(analytic), grid_best, analytic};
}

}  // namespace hsres
