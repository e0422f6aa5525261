#include "hsres/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "hsres/error.hpp"

namespace hsres {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void check_deficit(double deficit, const char* family, Index cutoff) {
  if (deficit > kMaxTraceDeficit) {
    std::ostringstream os;
    os << family << ": truncation deficit " << deficit << " at cutoff " << cutoff
       << " exceeds " << kMaxTraceDeficit << "; use a larger cutoff";
    throw TruncationError(os.str());
  }
}

FockState from_vector(const ComplexVector& v, const char* family, Index cutoff) {
  const double kept = v.squaredNorm();
  const double deficit = std::clamp(1.0 - kept, 0.0, 1.0);
  check_deficit(deficit, family, cutoff);
  const ComplexVector unit = v / std::sqrt(kept);
  return {DensityMatrix::pure(unit), {deficit, true}};
}

FockState from_block(const ComplexMatrix& block, const char* family, Index cutoff) {
  const double kept = block.trace().real();
  const double deficit = std::clamp(1.0 - kept, 0.0, 1.0);
  check_deficit(deficit, family, cutoff);
  return {DensityMatrix(block / kept, {}, PsdCheck::by_construction), {deficit, true}};
}

ComplexVector squeezed_amplitudes(double r, Index cutoff) {
  ComplexVector c = ComplexVector::Zero(cutoff);
  const double t = std::tanh(r);
  double amp = 1.0 / std::sqrt(std::cosh(r));
  for (Index n = 0; n < cutoff; n += 2) {
    c[n] = amp;
    const double m = static_cast<double>(n / 2 + 1);
    amp *= t * std::sqrt((2.0 * m - 1.0) / (2.0 * m));
  }
  return c;
}

// Diagonal tail sum_{n >= c} p_n of a probability vector.
Index smallest_cutoff(const RealVector& probabilities, double already_lost, double target) {
  double tail = already_lost;
  Index c = probabilities.size();
  while (c > 2 && tail + probabilities[c - 1] <= target) {
    tail += probabilities[c - 1];
    --c;
  }
  return c;
}

}  // namespace

FockSpace::FockSpace(Index cutoff) : cutoff_(cutoff) {
  if (cutoff < 2) throw DomainError("FockSpace: cutoff must be at least 2");
}

ComplexMatrix annihilation(const FockSpace& space) {
  const Index d = space.dim();
  ComplexMatrix a = ComplexMatrix::Zero(d, d);
  for (Index n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix creation(const FockSpace& space) { return annihilation(space).adjoint(); }

Observable number_operator(const FockSpace& space) {
  const Index d = space.dim();
  ComplexMatrix n = ComplexMatrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) n(k, k) = static_cast<double>(k);
  return Observable(std::move(n));
}

Quadratures quadratures(const FockSpace& space) {
  const ComplexMatrix a = annihilation(space);
  const ComplexMatrix ad = a.adjoint();
  const Complex i(0.0, 1.0);
  return {Observable((a + ad) / kSqrt2), Observable(i * (ad - a) / kSqrt2)};
}

ComplexVector coherent_amplitudes(Complex alpha, Index cutoff) {
  ComplexVector c(cutoff);
  Complex amp = std::exp(-0.5 * std::norm(alpha));
  for (Index n = 0; n < cutoff; ++n) {
    c[n] = amp;
    amp *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return c;
}

FockState coherent_state(Complex alpha, const FockSpace& space) {
  return from_vector(coherent_amplitudes(alpha, space.cutoff()), "coherent_state", space.cutoff());
}

FockState squeezed_vacuum(double r, const FockSpace& space) {
  if (!std::isfinite(r)) throw DomainError("squeezed_vacuum: r must be finite");
  return from_vector(squeezed_amplitudes(r, space.cutoff()), "squeezed_vacuum", space.cutoff());
}

FockState thermal_state(double xi, const FockSpace& space) {
  if (!(xi >= 0.0 && xi < 1.0)) throw DomainError("thermal_state: require 0 <= xi < 1");
  const Index d = space.dim();
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  double p = 1.0 - xi;
  for (Index n = 0; n < d; ++n, p *= xi) rho(n, n) = p;
  return from_block(rho, "thermal_state", d);
}

FockState displaced_squeezed(double x0, double r, const FockSpace& space) {
  if (x0 == 0.0) return squeezed_vacuum(r, space);
  const double dx = std::exp(r) / kSqrt2;
  const double dy = std::exp(-r) / kSqrt2;
  return gaussian_state(x0, 0.0, dx, dy, space);
}

FockState gaussian_state(double mean_x, double mean_y, double dx, double dy,
                         const FockSpace& space) {
  if (!(dx > 0.0 && dy > 0.0)) throw DomainError("gaussian_state: widths must be positive");
  if (dx * dy < 0.5 - 1e-12) throw DomainError("gaussian_state: dx*dy below 1/2 violates Heisenberg");

  // <alpha|rho|beta> e^{(|alpha|^2 + |beta|^2)/2} = T exp(g u + conj(g) v + a (u^2 + v^2)/2 + b u v)
  // with u = conj(alpha), v = beta, read off the Husimi function whose
  // quadrature variances are dx^2 + 1/2 and dy^2 + 1/2. Matrix elements then
  // follow a two-index Hermite recursion with no truncation error.
  const double vx = dx * dx + 0.5;
  const double vy = dy * dy + 0.5;
  const double a = 0.5 * (1.0 / vy - 1.0 / vx);
  const double b = 1.0 - 0.5 * (1.0 / vx + 1.0 / vy);
  const Complex g(mean_x / (kSqrt2 * vx), mean_y / (kSqrt2 * vy));
  const Complex gc = std::conj(g);
  const double t = std::exp(-0.5 * mean_x * mean_x / vx - 0.5 * mean_y * mean_y / vy) / std::sqrt(vx * vy);

  const Index d = space.cutoff();
  std::vector<double> root(d + 1);
  for (Index k = 0; k <= d; ++k) root[k] = std::sqrt(static_cast<double>(k));
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  h(0, 0) = t;
  for (Index n = 0; n + 1 < d; ++n) {
    Complex next = gc * h(0, n);
    if (n > 0) next += a * root[n] * h(0, n - 1);
    h(0, n + 1) = next / root[n + 1];
  }
  for (Index m = 0; m + 1 < d; ++m) {
    for (Index n = 0; n < d; ++n) {
      Complex next = g * h(m, n);
      if (m > 0) next += a * root[m] * h(m - 1, n);
      if (n > 0) next += b * root[n] * h(m, n - 1);
      h(m + 1, n) = next / root[m + 1];
    }
  }
  const ComplexMatrix block = 0.5 * (h + h.adjoint());
  return from_block(block, "gaussian_state", d);
}

DensityMatrix two_mode(const DensityMatrix& rho1, const DensityMatrix& rho2, Index max_dim) {
  return DensityMatrix(tensor(rho1.matrix(), rho2.matrix(), max_dim), {}, PsdCheck::by_construction);
}

namespace {
Observable two_mode_number(const FockSpace& first, const FockSpace& second, double sign) {
  const Index d1 = first.dim();
  const Index d2 = second.dim();
  if (d1 * d2 > Tolerances{}.max_dim) throw DimensionError("two-mode operator exceeds dimension limit");
  ComplexMatrix m = ComplexMatrix::Zero(d1 * d2, d1 * d2);
  for (Index i = 0; i < d1; ++i)
    for (Index j = 0; j < d2; ++j)
      m(i * d2 + j, i * d2 + j) = static_cast<double>(i) + sign * static_cast<double>(j);
  return Observable(std::move(m));
}
}  // namespace

Observable jz(const FockSpace& first, const FockSpace& second) {
  return two_mode_number(first, second, -1.0);
}

Observable total_number(const FockSpace& first, const FockSpace& second) {
  return two_mode_number(first, second, 1.0);
}

Index default_cutoff(double mean_photons) {
  const double n = std::max(mean_photons, 0.0);
  return std::max<Index>(20, static_cast<Index>(std::ceil(n + 8.0 * std::sqrt(n + 1.0) + 10.0)));
}

FockSpace space_for_coherent(Complex alpha, double target_deficit) {
  const double mean = std::norm(alpha);
  Index c = default_cutoff(mean);
  // Poisson tail; coherent amplitudes peak near |alpha|^2.
  for (;; c += 8) {
    const double kept = coherent_amplitudes(alpha, c).squaredNorm();
    if (1.0 - kept <= target_deficit) break;
    if (c > 4000) throw TruncationError("space_for_coherent: amplitude too large");
  }
  return FockSpace(c);
}

FockSpace space_for_squeezed(double r, double target_deficit) {
  const double mean = std::sinh(r) * std::sinh(r);
  Index c = default_cutoff(mean);
  const ComplexVector amps = squeezed_amplitudes(r, 8000);
  double kept = amps.head(c).squaredNorm();
  while (1.0 - kept > target_deficit) {
    if (c + 2 > amps.size()) throw TruncationError("space_for_squeezed: squeezing too strong");
    kept += std::norm(amps[c]) + std::norm(amps[c + 1]);
    c += 2;
  }
  return FockSpace(c);
}

FockSpace space_for_thermal(double xi, double target_deficit) {
  if (!(xi >= 0.0 && xi < 1.0)) throw DomainError("space_for_thermal: require 0 <= xi < 1");
  const double mean = xi / (1.0 - xi);
  Index c = default_cutoff(mean);
  if (xi > 0.0) {
    const double needed = std::ceil(std::log(target_deficit) / std::log(xi));
    if (needed > 8000) throw TruncationError("space_for_thermal: xi too close to 1");
    c = std::max<Index>(c, static_cast<Index>(needed));
  }
  return FockSpace(c);
}

FockSpace space_for_gaussian(double mean_x, double mean_y, double dx, double dy,
                             double target_deficit) {
  const double mean = 0.5 * (dx * dx + dy * dy + mean_x * mean_x + mean_y * mean_y - 1.0);
  Index c = default_cutoff(mean);
  for (int attempt = 0; attempt < 12; ++attempt) {
    const FockSpace trial(c);
    // Build without the deficit guard: we only want the diagonal here.
    FockState state = [&] {
      try {
        return gaussian_state(mean_x, mean_y, dx, dy, trial);
      } catch (const TruncationError&) {
        return FockState{DensityMatrix::pure(ComplexVector::Unit(c, 0)), {1.0, false}};
      }
    }();
    const double lost = state.truncation.trace_deficit;
    if (lost <= target_deficit) {
      const RealVector diag = state.rho.matrix().diagonal().real() * (1.0 - lost);
      return FockSpace(std::max(default_cutoff(mean), smallest_cutoff(diag, lost, target_deficit)));
    }
    c = std::max(c + 8, static_cast<Index>(std::ceil(1.5 * static_cast<double>(c))));
    if (c > 3000) break;
  }
  throw TruncationError("space_for_gaussian: could not reach the requested deficit");
}

}  // namespace hsres
