#include <doctest.h>

#include <cmath>

#include "hsres/error.hpp"
#include "hsres/fock.hpp"
#include "hsres/measures.hpp"
#include "hsres/random.hpp"
#include "test_support.hpp"

using namespace hsres;
using hsres::testing::max_entry;
using hsres::testing::naive_lambda_sq;
using hsres::testing::naive_variance;

namespace {

DensityMatrix diag_rho(std::initializer_list<double> r) {
  ComplexMatrix m = ComplexMatrix::Zero(Index(r.size()), Index(r.size()));
  Index i = 0;
  for (double x : r) m(i, i) = x, ++i;
  return DensityMatrix(m);
}

// Brute-force double sum over the eigenbasis of g, with g diagonal in the
// computational basis.
double tilde_oracle_diag_g(const ComplexMatrix& rho, const RealVector& g) {
  double s = 0.0;
  for (Index j = 0; j < g.size(); ++j)
    for (Index k = 0; k < g.size(); ++k) s += 0.5 * (g[j] + g[k]) * (g[j] + g[k]) * std::norm(rho(k, j));
  return s;
}

}  // namespace

TEST_CASE("evolve") {
  Rng rng(41);
  const DensityMatrix rho = random_density(5, rng);
  const Observable g = random_hermitian(5, rng);
  CHECK(max_entry(evolve(rho, g, 0.0).matrix() - rho.matrix()) < 1e-14);
  const DensityMatrix out = evolve(rho, g, 0.8);
  CHECK(std::abs(out.matrix().trace().real() - 1.0) < 1e-12);
  const Spectrum a = eigendecompose(rho);
  const Spectrum b = eigendecompose(out);
  CHECK((a.values - b.values).cwiseAbs().maxCoeff() < 1e-9);

  const FockSpace s(30);
  const DensityMatrix th = thermal_state(0.5, s).rho;
  CHECK(max_entry(evolve(th, number_operator(s), 1.3).matrix() - th.matrix()) < 1e-14);

  // e^{i pi N} |1> = |-1>
  const DensityMatrix rotated = evolve(coherent_state(1.0, s).rho, number_operator(s), M_PI);
  const DensityMatrix target = coherent_state(-1.0, s).rho;
  CHECK(std::abs((rotated.matrix() * target.matrix()).trace().real() - 1.0) < 1e-7);
  // dense path agrees with the diagonal path
  const Observable n_dense(number_operator(s).matrix() + 1e-300 * ComplexMatrix::Ones(30, 30));
  CHECK(max_entry(evolve(coherent_state(1.0, s).rho, n_dense, 0.4).matrix() -
                  evolve(coherent_state(1.0, s).rho, number_operator(s), 0.4).matrix()) < 1e-10);
}

TEST_CASE("hs_distance_sq") {
  Rng rng(43);
  const DensityMatrix a = random_density(4, rng);
  const DensityMatrix b = random_density(4, rng);
  CHECK(hs_distance_sq(a, a) == 0.0);
  CHECK(std::abs(hs_distance_sq(a, b) - hs_distance_sq(b, a)) < 1e-15);
  CHECK(hs_distance_sq(a, b) > 0.0);
  CHECK(std::abs(hs_distance_sq(diag_rho({1.0, 0.0}), diag_rho({0.0, 1.0})) - 2.0) < 1e-15);
  CHECK_THROWS_AS(hs_distance_sq(diag_rho({1.0, 0.0}), diag_rho({1.0, 0.0, 0.0})), DimensionError);
}

TEST_CASE("lambda_sq: reference values") {
  for (const Complex alpha : {Complex(0.0, 0.0), Complex(1.0, 0.5), Complex(2.0, -1.0)}) {
    const FockSpace s = space_for_coherent(alpha);
    const DensityMatrix rho = coherent_state(alpha, s).rho;
    CHECK(std::abs(lambda_sq(rho, quadratures(s).x) - 0.5) < 1e-6);
  }
  const FockSpace s(40);
  CHECK(lambda_sq(thermal_state(0.5, s).rho, number_operator(s)) == 0.0);
  Rng rng(47);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix p = random_pure(2, rng);
    CHECK(std::abs(lambda_sq(p, pauli_z()) - variance(p, pauli_z())) < 1e-10);
  }
}

TEST_CASE("lambda_sq: four forms agree with the direct trace on 100 random pairs") {
  Rng rng(53);
  std::uniform_int_distribution<int> dim(2, 12);
  for (int t = 0; t < 100; ++t) {
    const Index d = dim(rng);
    const DensityMatrix rho = random_density_of_rank(d, 1 + Index(rng() % d), rng);
    const Observable g = random_hermitian(d, rng);
    const double oracle = naive_lambda_sq(rho.matrix(), g.matrix());
    CHECK(std::abs(lambda_sq(rho, g) - oracle) < 1e-8);
    CHECK(std::abs(lambda_sq_spectral_g(rho, g) - oracle) < 1e-8);
    CHECK(std::abs(lambda_sq_spectral_rho(rho, g) - oracle) < 1e-8);
    CHECK(std::abs(lambda_sq_commutator(rho, g) - oracle) < 1e-8);
  }
  // commuting pair
  const DensityMatrix rho = diag_rho({0.5, 0.3, 0.2});
  const Observable g(diag_rho({0.2, 0.3, 0.5}).matrix() * 4.0);
  CHECK(lambda_sq_spectral_g(rho, g) < 1e-14);
  CHECK(lambda_sq_spectral_rho(rho, g) < 1e-14);
  CHECK(lambda_sq_commutator(rho, g) < 1e-14);
}

TEST_CASE("lambda_sq: two-level closed form") {
  const double q = 0.3;
  const Complex mu(0.6, 0.2);
  const double c = std::sqrt(q * (1 - q));
  ComplexMatrix m(2, 2);
  m << q, mu * c, std::conj(mu) * c, 1 - q;
  ComplexMatrix g = ComplexMatrix::Zero(2, 2);
  g(0, 0) = 1.5;
  g(1, 1) = -0.5;
  const double expected = q * (1 - q) * 4.0 * std::norm(mu);
  CHECK(std::abs(lambda_sq_spectral_g(DensityMatrix(m), Observable(g)) - expected) < 1e-12);
  CHECK(std::abs(lambda_sq(DensityMatrix(m), Observable(g)) - expected) < 1e-12);
}

TEST_CASE("variance bound, pure-state equality and symmetry on 1000 random pairs") {
  Rng rng(59);
  std::uniform_int_distribution<int> dim(2, 16);
  int pure_cases = 0;
  for (int t = 0; t < 1000; ++t) {
    const Index d = dim(rng);
    const Index rank = (t % 4 == 0) ? 1 : 1 + Index(rng() % d);
    const DensityMatrix rho = random_density_of_rank(d, rank, rng);
    const Observable g = random_hermitian(d, rng);
    const ResolutionReport r = resolution(rho, g);
    CHECK(r.lambda_sq <= r.variance + 1e-9);
    CHECK(std::abs(r.variance - naive_variance(rho.matrix(), g.matrix())) < 1e-9);
    if (rho.purity() > 1.0 - 1e-10) {
      ++pure_cases;
      CHECK(std::abs(r.lambda_sq - r.variance) < 1e-9);
    }
    if (t < 100) {
      const DensityMatrix other = random_density(d, rng);
      CHECK(std::abs(lambda_sq(rho.as_observable(), other.as_observable()) -
                     lambda_sq(other.as_observable(), rho.as_observable())) < 1e-10);
    }
  }
  CHECK(pure_cases >= 250);
}

TEST_CASE("lambda vanishes exactly when rho and G commute") {
  Rng rng(61);
  for (int t = 0; t < 50; ++t) {
    const Index d = 2 + Index(t % 6);
    // commuting: G built on rho's eigenbasis
    const DensityMatrix rho = random_density(d, rng);
    const Spectrum s = eigendecompose(rho);
    RealVector gv = RealVector::Random(d);
    const Observable g(s.vectors * gv.cast<Complex>().asDiagonal() * s.vectors.adjoint());
    CHECK(max_entry(commutator(rho.as_observable(), g)) < 1e-6);
    CHECK(lambda_sq(rho, g) < 1e-12);
    // generic: not commuting
    const Observable h = random_hermitian(d, rng);
    CHECK(max_entry(commutator(rho.as_observable(), h)) >= 1e-6);
    CHECK(lambda_sq(rho, h) >= 1e-12);
  }
}

TEST_CASE("small_signal_ratio") {
  const FockSpace s(30);
  const DensityMatrix coh = coherent_state(1.0, s).rho;
  CHECK(std::abs(small_signal_ratio(coh, quadratures(s).x, 1e-3) - 1.0) < 1e-5);
  const FockSpace s2 = space_for_squeezed(0.5);
  CHECK(std::abs(small_signal_ratio(squeezed_vacuum(0.5, s2).rho, number_operator(s2), 1e-3) - 1.0) < 1e-4);

  const double d2 = std::abs(small_signal_ratio(coh, quadratures(s).x, 1e-2) - 1.0);
  const double d3 = std::abs(small_signal_ratio(coh, quadratures(s).x, 1e-3) - 1.0);
  CHECK(d3 < d2);
  CHECK(d2 / d3 == doctest::Approx(100.0).epsilon(0.05));

  CHECK_THROWS_AS(small_signal_ratio(coh, quadratures(s).x, 0.0), DomainError);
  CHECK_THROWS_AS(small_signal_ratio(thermal_state(0.5, s).rho, number_operator(s), 0.1), DomainError);
}

TEST_CASE("variance reference values") {
  const FockSpace s(60);
  const Complex alpha(1.5, -0.5);
  CHECK(std::abs(variance(coherent_state(alpha, s).rho, number_operator(s)) - std::norm(alpha)) < 1e-6);
  CHECK(std::abs(variance(DensityMatrix::pure(ComplexVector::Unit(60, 3)), number_operator(s))) < 1e-14);
  // geometric-series moments: <N> = sum n r_n, <N^2> = sum n^2 r_n
  const double xi = 0.4;
  const FockSpace big = space_for_thermal(xi);
  double m1 = 0.0, m2 = 0.0;
  for (int n = 0; n < 400; ++n) {
    const double r = (1 - xi) * std::pow(xi, n);
    m1 += n * r;
    m2 += double(n) * n * r;
  }
  CHECK(std::abs(variance(thermal_state(xi, big).rho, number_operator(big)) - (m2 - m1 * m1)) < 1e-9);
  CHECK(std::abs((m2 - m1 * m1) - xi / ((1 - xi) * (1 - xi))) < 1e-12);
}

TEST_CASE("tilde_lambda_sq") {
  // single eigenvector of G
  ComplexMatrix g = ComplexMatrix::Zero(3, 3);
  g(0, 0) = 1.7;
  g(1, 1) = -0.4;
  g(2, 2) = 2.0;
  CHECK(std::abs(tilde_lambda_sq(diag_rho({1.0, 0.0, 0.0}), Observable(g)) - 2 * 1.7 * 1.7) < 1e-12);

  Rng rng(67);
  for (int t = 0; t < 50; ++t) {
    const Index d = 2 + Index(t % 8);
    const DensityMatrix rho = random_density(d, rng);
    const RealVector gv = RealVector::Random(d);
    const Observable gd(ComplexMatrix(gv.cast<Complex>().asDiagonal()));
    const double sum = tilde_oracle_diag_g(rho.matrix(), gv);
    CHECK(std::abs(tilde_lambda_sq(rho, gd) - sum) < 1e-10);
    // sum form equals tr(rho^2 G^2) + tr(rho G rho G)
    const ComplexMatrix& r = rho.matrix();
    const ComplexMatrix& m = gd.matrix();
    CHECK(std::abs(sum - ((r * r * m * m).trace() + (r * m * r * m).trace()).real()) < 1e-10);
    // and for dense G
    const Observable h = random_hermitian(d, rng);
    const ComplexMatrix& hm = h.matrix();
    CHECK(std::abs(tilde_lambda_sq(rho, h) - ((r * r * hm * hm).trace() + (r * hm * r * hm).trace()).real()) < 1e-9);
  }

  // 2x2 diagonal rho, sigma_x: only off-diagonal |rho_kj|^2 = 0, so the four
  // terms are (g_j+g_k)^2 |rho_kj|^2 in the sigma_x eigenbasis.
  const DensityMatrix rho = diag_rho({0.75, 0.25});
  // In the sigma_x basis rho = [[1/2, 1/4], [1/4, 1/2]], g = (1, -1).
  const double four_terms = 0.5 * (4.0 * 0.25 + 0.0 * 0.0625 + 0.0 * 0.0625 + 4.0 * 0.25);
  CHECK(std::abs(tilde_lambda_sq(rho, pauli_x()) - four_terms) < 1e-12);
}

TEST_CASE("fisher_info") {
  // thermal xi: (1-xi)/(2(1+xi)) from the nearest-neighbour series
  for (const double xi : {1.0 / 3.0, 0.5}) {
    double series = 0.0;
    for (int n = 0; n < 400; ++n) {
      const double rn = (1 - xi) * std::pow(xi, n);
      const double rn1 = rn * xi;
      series += (rn - rn1) * (rn - rn1) / (rn + rn1) * (n + 1) / 2.0;
    }
    const FockSpace s = space_for_thermal(xi);
    CHECK(std::abs(fisher_info(thermal_state(xi, s).rho, quadratures(s).x) - series) < 1e-4);
    CHECK(std::abs(fisher_info(thermal_state(xi, s).rho, quadratures(s).y) - series) < 1e-4);
  }
  const FockSpace s = space_for_thermal(1.0 / 3.0);
  CHECK(std::abs(fisher_info(thermal_state(1.0 / 3.0, s).rho, quadratures(s).x) - 0.25) < 1e-4);

  Rng rng(71);
  for (int t = 0; t < 30; ++t) {
    const Index d = 2 + Index(t % 7);
    const DensityMatrix p = random_pure(d, rng);
    const Observable g = random_hermitian(d, rng);
    CHECK(std::abs(fisher_info(p, g) - naive_variance(p.matrix(), g.matrix())) < 1e-8);
  }
  const FockSpace f(30);
  CHECK(fisher_info(thermal_state(0.5, f).rho, number_operator(f)) < 1e-14);
}

TEST_CASE("bures_distance_sq") {
  Rng rng(73);
  const DensityMatrix a = random_density(4, rng);
  const DensityMatrix b = random_density(4, rng);
  CHECK(std::abs(bures_distance_sq(a, a)) < 1e-9);
  CHECK(std::abs(bures_distance_sq(a, b) - bures_distance_sq(b, a)) < 1e-8);
  CHECK(std::abs(bures_distance_sq(diag_rho({1.0, 0.0}), diag_rho({0.0, 1.0})) - 2.0) < 1e-12);
}

TEST_CASE("Bures local limit tracks Fisher with a stable constant") {
  // Measured: bures(rho, evolve(rho, G, chi)) / chi^2 / I_F
  std::vector<double> constants;
  const FockSpace s = space_for_thermal(0.5);
  const Quadratures q = quadratures(s);
  const DensityMatrix th = thermal_state(0.5, s).rho;
  const double chi = 1e-3;
  constants.push_back(bures_distance_sq(th, evolve(th, q.x, chi)) / (chi * chi) / fisher_info(th, q.x));
  Rng rng(79);
  for (int t = 0; t < 5; ++t) {
    const DensityMatrix rho = random_density(4, rng);
    const Observable g = random_hermitian(4, rng);
    constants.push_back(bures_distance_sq(rho, evolve(rho, g, chi)) / (chi * chi) / fisher_info(rho, g));
  }
  for (double c : constants) CHECK(std::abs(c - 1.0) < 1e-3);
}

TEST_CASE("hellinger_distance and skew_info") {
  const DensityMatrix a = diag_rho({0.75, 0.25});
  const DensityMatrix b = diag_rho({0.25, 0.75});
  const double h = 2.0 * (std::sqrt(0.75) - 0.5) * (std::sqrt(0.75) - 0.5);
  CHECK(std::abs(hellinger_distance(a, b) - h) < 1e-12);
  CHECK(hellinger_distance(a, a) < 1e-14);

  CHECK(std::abs(skew_info(a, pauli_x()) - (1.0 - std::sqrt(3.0) / 2.0)) < 1e-12);
  CHECK(std::abs(skew_info(a, pauli_x()) - 0.134) < 1e-3);
  const FockSpace s = space_for_thermal(0.25);
  CHECK(std::abs(skew_info(thermal_state(0.25, s).rho, quadratures(s).x) - 1.0 / 6.0) < 1e-4);

  Rng rng(83);
  for (int t = 0; t < 40; ++t) {
    const Index d = 2 + Index(t % 7);
    const DensityMatrix p = random_pure(d, rng);
    const Observable g = random_hermitian(d, rng);
    CHECK(std::abs(skew_info(p, g) - variance(p, g)) < 1e-8);
    const DensityMatrix rho = random_density(d, rng);
    CHECK(skew_info(rho, g) <= fisher_info(rho, g) + 1e-9);
    // Hellinger local limit against skew information: constant 2
    const double chi = 1e-3;
    CHECK(std::abs(hellinger_distance(rho, evolve(rho, g, chi)) / (chi * chi) / skew_info(rho, g) - 2.0) < 1e-3);
  }
}

TEST_CASE("counterexample") {
  const CounterexampleReport r = counterexample_check();
  CHECK(std::abs(r.skew_x - 0.134) < 1e-3);
  CHECK(std::abs(r.skew_y - 0.134) < 1e-3);
  CHECK(std::abs(r.right - 1.0) < 1e-14);
  CHECK(std::abs(r.left - 4.0 * std::pow(1.0 - std::sqrt(3.0) / 2.0, 2)) < 1e-12);
  CHECK(r.violated);
}

TEST_CASE("quadrature products for squeezed and thermal states") {
  double previous = 1e300;
  for (const double r : {0.5, 1.0, 1.5, 2.0}) {
    const FockSpace s = space_for_squeezed(r);
    const DensityMatrix rho = squeezed_vacuum(r, s).rho;
    const Quadratures q = quadratures(s);
    const double lx = lambda_sq(rho, q.x);
    const double ly = lambda_sq(rho, q.y);
    const double vx = naive_variance(rho.matrix(), q.x.matrix());
    const double vy = naive_variance(rho.matrix(), q.y.matrix());
    CHECK(std::abs(std::sqrt(lx * ly) - 1.0 / (8.0 * vx * vy)) < 1e-5);
    CHECK(std::abs(std::sqrt(lx * ly) - 0.5) < 1e-5);
    previous = std::sqrt(lx * ly);
  }
  CHECK(previous > 0.0);
  previous = 1e300;
  for (const double xi : {0.5, 0.7, 0.9, 0.97}) {
    const FockSpace s = space_for_thermal(xi);
    const DensityMatrix rho = thermal_state(xi, s).rho;
    const Quadratures q = quadratures(s);
    const double f = fisher_info(rho, q.x) * fisher_info(rho, q.y);
    const double closed = std::pow((1 - xi) / (2 * (1 + xi)), 2);
    CHECK(std::abs(f - closed) < 1e-6);
    CHECK(f < previous);
    previous = f;
  }
}
