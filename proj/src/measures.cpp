#include "hsres/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hsres/error.hpp"

namespace hsres {

namespace {

constexpr double kClampBelow = 1e-10;

void require_same_dim(Index a, Index b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

// Real part of a quantity that is real analytically; the imaginary part is
// roundoff and must stay small relative to the magnitudes involved.
double real_part(Complex z, double scale, const char* what) {
  if (std::abs(z.imag()) > 1e-9 * std::max(1.0, scale)) {
    std::ostringstream os;
    os << what << ": imaginary residue " << z.imag() << " exceeds roundoff";
    throw InvariantError(os.str());
  }
  return z.real();
}

double clamp_nonnegative(double v) { return (v < 0.0 && v >= -kClampBelow) ? 0.0 : v; }

// 1/2 sum_jk (w_j - w_k)^2 |m_jk|^2, or with (w_j + w_k)^2 when `plus`.
double weighted_pair_sum(const RealVector& w, const ComplexMatrix& m, bool plus) {
  const Index d = w.size();
  double sum = 0.0;
  for (Index j = 0; j < d; ++j)
    for (Index k = 0; k < d; ++k) {
      const double diff = plus ? w[j] + w[k] : w[j] - w[k];
      const Complex z = m(k, j);
      sum += diff * diff * (z.real() * z.real() + z.imag() * z.imag());
    }
  return 0.5 * sum;
}

RealVector clamped(RealVector values) {
  for (double& v : values)
    if (v < 0.0 && v >= -kClampBelow) v = 0.0;
  return values;
}

}  // namespace

Observable pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return Observable(m);
}

Observable pauli_y() {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  m << 0.0, -i, i, 0.0;
  return Observable(m);
}

Observable pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return Observable(m);
}

DensityMatrix evolve(const DensityMatrix& rho, const Observable& g, double chi) {
  require_same_dim(rho.dim(), g.dim(), "evolve");
  if (chi == 0.0) return rho;
  const Complex i(0.0, 1.0);
  ComplexMatrix out;
  if (g.is_diagonal()) {
    const ComplexVector phase = (i * chi * g.matrix().diagonal()).array().exp();
    out = phase.asDiagonal() * rho.matrix() * phase.conjugate().asDiagonal();
  } else {
    const ComplexMatrix u = expm(i * chi * g.matrix());
    out = u * rho.matrix() * u.adjoint();
  }
  return DensityMatrix(std::move(out), {}, PsdCheck::by_construction);
}

double hs_distance_sq(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require_same_dim(rho1.dim(), rho2.dim(), "hs_distance_sq");
  // tr(D^2) for Hermitian D is its squared Frobenius norm.
  return (rho1.matrix() - rho2.matrix()).squaredNorm();
}

double lambda_sq(const Observable& a, const Observable& b) {
  require_same_dim(a.dim(), b.dim(), "lambda_sq");
  // A diagonal operand is its own eigenbasis; the pair sum is O(dim^2).
  if (b.is_diagonal())
    return clamp_nonnegative(weighted_pair_sum(b.matrix().diagonal().real(), a.matrix(), false));
  if (a.is_diagonal())
    return clamp_nonnegative(weighted_pair_sum(a.matrix().diagonal().real(), b.matrix(), false));
  // With P = AB: tr(A^2 B^2) = tr(P^dagger P) and tr(ABAB) = tr(P P).
  const ComplexMatrix p = a.matrix() * b.matrix();
  const double squares = p.squaredNorm();
  const double cross = real_part(trace_of_product(p, p), squares, "lambda_sq");
  return clamp_nonnegative(squares - cross);
}

double lambda_sq(const DensityMatrix& rho, const Observable& g) {
  return lambda_sq(rho.as_observable(), g);
}

double lambda_sq_spectral_g(const DensityMatrix& rho, const Observable& g) {
  require_same_dim(rho.dim(), g.dim(), "lambda_sq_spectral_g");
  if (g.is_diagonal())
    return clamp_nonnegative(weighted_pair_sum(g.matrix().diagonal().real(), rho.matrix(), false));
  const Spectrum s = eigendecompose(g);
  const ComplexMatrix rotated = s.vectors.adjoint() * rho.matrix() * s.vectors;
  return clamp_nonnegative(weighted_pair_sum(s.values, rotated, false));
}

double lambda_sq_spectral_rho(const DensityMatrix& rho, const Observable& g) {
  require_same_dim(rho.dim(), g.dim(), "lambda_sq_spectral_rho");
  const Spectrum s = eigendecompose(rho);
  const ComplexMatrix rotated = s.vectors.adjoint() * g.matrix() * s.vectors;
  return clamp_nonnegative(weighted_pair_sum(s.values, rotated, false));
}

double lambda_sq_commutator(const DensityMatrix& rho, const Observable& g) {
  require_same_dim(rho.dim(), g.dim(), "lambda_sq_commutator");
  const ComplexMatrix c = commutator(rho.matrix(), g.matrix());
  const Complex t = trace_product({std::cref(c), std::cref(c)});
  return clamp_nonnegative(-0.5 * real_part(t, c.squaredNorm(), "lambda_sq_commutator"));
}

double small_signal_ratio(const DensityMatrix& rho, const Observable& g, double chi) {
  if (chi == 0.0) throw DomainError("small_signal_ratio: chi must be non-zero");
  const double lam = lambda_sq(rho, g);
  if (lam <= 1e-12) throw DomainError("small_signal_ratio: probe invariant under G (Lambda = 0)");
  return hs_distance_sq(rho, evolve(rho, g, chi)) / (2.0 * chi * chi * lam);
}

double variance(const DensityMatrix& rho, const Observable& g) {
  require_same_dim(rho.dim(), g.dim(), "variance");
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix& m = g.matrix();
  const double scale = m.squaredNorm();
  const double mean = real_part(trace_of_product(r, m), std::sqrt(scale), "variance");
  double second = 0.0;
  if (g.is_diagonal()) {
    second = (r.diagonal().real().array() * m.diagonal().real().array().square()).sum();
  } else {
    const ComplexMatrix m2 = m * m;
    second = real_part(trace_of_product(r, m2), scale, "variance");
  }
  return clamp_nonnegative(second - mean * mean);
}

ResolutionReport resolution(const DensityMatrix& rho, const Observable& g) {
  ResolutionReport rep;
  rep.lambda_sq = lambda_sq(rho, g);
  rep.variance = variance(rho, g);
  if (rep.variance > 0.0)
    rep.ratio = std::clamp(rep.lambda_sq / rep.variance, 0.0, 1.0);
  else
    rep.ratio = rep.lambda_sq > 0.0 ? 0.0 : 1.0;
  return rep;
}

double tilde_lambda_sq(const DensityMatrix& rho, const Observable& g) {
  require_same_dim(rho.dim(), g.dim(), "tilde_lambda_sq");
  if (g.is_diagonal())
    return weighted_pair_sum(g.matrix().diagonal().real(), rho.matrix(), true);
  const Spectrum s = eigendecompose(g);
  const ComplexMatrix rotated = s.vectors.adjoint() * rho.matrix() * s.vectors;
  return weighted_pair_sum(s.values, rotated, true);
}

double fisher_info(const DensityMatrix& rho, const Observable& g) {
  require_same_dim(rho.dim(), g.dim(), "fisher_info");
  const Spectrum s = eigendecompose(rho);
  const RealVector r = clamped(s.values);
  const ComplexMatrix rotated = s.vectors.adjoint() * g.matrix() * s.vectors;
  const Index d = r.size();
  double sum = 0.0;
  for (Index j = 0; j < d; ++j)
    for (Index k = 0; k < d; ++k) {
      const double total = r[j] + r[k];
      if (total <= kFisherPairCut) continue;
      const double diff = r[j] - r[k];
      sum += diff * diff / total * std::norm(rotated(j, k));
    }
  return 0.5 * sum;
}

double root_fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require_same_dim(rho1.dim(), rho2.dim(), "root_fidelity");
  const Observable s = psd_sqrt(rho1);
  const Observable inner(s.matrix() * rho2.matrix() * s.matrix(), Tolerances{.hermitian = 1e-8});
  const Spectrum spec = eigendecompose(inner);
  double sum = 0.0;
  for (double v : spec.values) sum += std::sqrt(std::max(v, 0.0));
  return sum;
}

double bures_distance_sq(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  return 2.0 * (1.0 - root_fidelity(rho1, rho2));
}

double hellinger_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require_same_dim(rho1.dim(), rho2.dim(), "hellinger_distance");
  return (psd_sqrt(rho1).matrix() - psd_sqrt(rho2).matrix()).squaredNorm();
}

double skew_info(const DensityMatrix& rho, const Observable& g) {
  require_same_dim(rho.dim(), g.dim(), "skew_info");
  return lambda_sq(psd_sqrt(rho), g);
}

CounterexampleReport counterexample_check() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 0.75;
  m(1, 1) = 0.25;
  const DensityMatrix rho(m);
  const Observable sx = pauli_x();
  const Observable sy = pauli_y();

  CounterexampleReport rep;
  rep.skew_x = skew_info(rho, sx);
  rep.skew_y = skew_info(rho, sy);
  rep.left = 4.0 * rep.skew_x * rep.skew_y;
  rep.right = std::norm(trace_of_product(rho.matrix(), commutator(sx, sy)));
  rep.violated = rep.left < rep.right;
  return rep;
}

}  // namespace hsres
