#include "hsres/random.hpp"

#include <numeric>

namespace hsres {

namespace {
Complex complex_normal(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}
}  // namespace

ComplexVector random_unit_vector(Index dim, Rng& rng) {
  ComplexVector v(dim);
  for (Index i = 0; i < dim; ++i) v[i] = complex_normal(rng);
  return v / v.norm();
}

Observable random_hermitian(Index dim, Rng& rng) {
  ComplexMatrix m(dim, dim);
  for (Index j = 0; j < dim; ++j)
    for (Index i = 0; i < dim; ++i) m(i, j) = complex_normal(rng);
  return Observable((m + m.adjoint()) * 0.5);
}

DensityMatrix random_density_of_rank(Index dim, Index rank, Rng& rng) {
  ComplexMatrix w(dim, rank);
  for (Index j = 0; j < rank; ++j)
    for (Index i = 0; i < dim; ++i) w(i, j) = complex_normal(rng);
  ComplexMatrix rho = w * w.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho), {}, PsdCheck::by_construction);
}

DensityMatrix random_density(Index dim, Rng& rng) { return random_density_of_rank(dim, dim, rng); }

DensityMatrix random_pure(Index dim, Rng& rng) {
  return DensityMatrix::pure(random_unit_vector(dim, rng));
}

std::vector<double> random_simplex(std::size_t k, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(k);
  for (double& x : w) x = e(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  // Exact unit sum up to one ulp-level correction on the last entry.
  const double drift = std::accumulate(w.begin(), w.end(), 0.0) - 1.0;
  w.back() -= drift;
  return w;
}

}  // namespace hsres
