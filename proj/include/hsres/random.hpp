#pragma once

// Seeded random ensembles used by the reproduction suite and the tests.

#include <random>
#include <vector>

#include "hsres/hermitian.hpp"

namespace hsres {

using Rng = std::mt19937_64;

/// Haar-random unit vector.
ComplexVector random_unit_vector(Index dim, Rng& rng);

/// Hermitian matrix with i.i.d. standard complex Gaussian entries above the
/// diagonal and real Gaussian diagonal (GUE up to scale).
Observable random_hermitian(Index dim, Rng& rng);

/// W W^dagger / tr, W from the complex Ginibre ensemble.
DensityMatrix random_density(Index dim, Rng& rng);

/// Random-rank mixed state: rank in [1, dim].
DensityMatrix random_density_of_rank(Index dim, Index rank, Rng& rng);

DensityMatrix random_pure(Index dim, Rng& rng);

/// Dirichlet(1, ..., 1) weights.
std::vector<double> random_simplex(std::size_t k, Rng& rng);

}  // namespace hsres
