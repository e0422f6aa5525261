#include <doctest.h>

#include <cmath>

#include "hsres/error.hpp"
#include "hsres/fock.hpp"
#include "hsres/measures.hpp"
#include "test_support.hpp"

using namespace hsres;
using hsres::testing::max_entry;
using hsres::testing::naive_variance;

namespace {

double expect(const DensityMatrix& rho, const Observable& g) { return (rho.matrix() * g.matrix()).trace().real(); }

// Poisson mass at or above `cutoff` for mean m, summed term by term.
double poisson_tail(double m, int cutoff) {
  double term = std::exp(-m);
  double below = 0.0;
  for (int n = 0; n < cutoff; ++n) {
    below += term;
    term *= m / (n + 1);
  }
  return 1.0 - below;
}

// Squeezed-vacuum amplitude on |2m> from factorials, independent of the
// library recursion.
double squeezed_even_amp(double r, int m) {
  const double t = std::tanh(r);
  const double logmag = m * std::log(t) + 0.5 * hsres::testing::log_factorial(2 * m) -
                        m * std::log(2.0) - hsres::testing::log_factorial(m) - 0.5 * std::log(std::cosh(r));
  return std::exp(logmag);
}

// D(alpha) S(r) rho_th S^dagger D^dagger built with dense exponentials in a
// padded space, then cropped.
ComplexMatrix gaussian_by_exponentials(double mx, double my, double dx, double dy, Index cutoff) {
  const Index m = cutoff + 60;
  const FockSpace work(m);
  const ComplexMatrix a = annihilation(work);
  const ComplexMatrix ad = a.adjoint();
  const double p = dx * dy;
  const double xi = (2 * p - 1) / (2 * p + 1);
  const double r = 0.5 * std::log(dx / dy);
  const Complex alpha(mx / std::sqrt(2.0), my / std::sqrt(2.0));
  const ComplexMatrix s = expm(0.5 * r * (ad * ad - a * a));
  const ComplexMatrix d = expm(alpha * ad - std::conj(alpha) * a);
  ComplexMatrix th = ComplexMatrix::Zero(m, m);
  for (Index n = 0; n < m; ++n) th(n, n) = (1 - xi) * std::pow(xi, double(n));
  const ComplexMatrix u = d * s;
  const ComplexMatrix full = u * th * u.adjoint();
  return full.topLeftCorner(cutoff, cutoff);
}

}  // namespace

TEST_CASE("FockSpace and operators") {
  CHECK_THROWS_AS(FockSpace(1), DomainError);
  const FockSpace s(6);
  const ComplexMatrix a = annihilation(s);
  for (Index n = 1; n < 6; ++n) CHECK(std::abs(a(n - 1, n) - std::sqrt(double(n))) < 1e-15);
  CHECK(max_entry(creation(s) - a.adjoint()) == 0.0);
  const ComplexMatrix n_op = number_operator(s).matrix();
  for (Index n = 0; n < 6; ++n) CHECK(n_op(n, n).real() == double(n));
  const Quadratures q = quadratures(s);
  const double r2 = std::sqrt(2.0);
  CHECK(max_entry(q.x.matrix() - (a + a.adjoint()) / r2) < 1e-15);
  CHECK(max_entry(q.y.matrix() - Complex(0, 1) * (a.adjoint() - a) / r2) < 1e-15);
}

TEST_CASE("coherent amplitudes follow the Poisson recursion") {
  const Complex alpha(1.1, -0.4);
  const ComplexVector c = coherent_amplitudes(alpha, 30);
  Complex expected = std::exp(-0.5 * std::norm(alpha));
  for (Index n = 0; n < 30; ++n) {
    CHECK(std::abs(c[n] - expected) < 1e-14);
    expected *= alpha / std::sqrt(double(n + 1));
  }
}

TEST_CASE("coherent state moments") {
  for (const Complex alpha : {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(2.0, 1.0), Complex(-0.3, 1.7)}) {
    const FockSpace s = space_for_coherent(alpha);
    const FockState st = coherent_state(alpha, s);
    const Quadratures q = quadratures(s);
    CHECK(std::abs(expect(st.rho, number_operator(s)) - std::norm(alpha)) < 1e-9);
    CHECK(std::abs(expect(st.rho, q.x) - std::sqrt(2.0) * alpha.real()) < 1e-9);
    CHECK(std::abs(expect(st.rho, q.y) - std::sqrt(2.0) * alpha.imag()) < 1e-9);
    CHECK(std::abs(naive_variance(st.rho.matrix(), q.x.matrix()) - 0.5) < 1e-8);
    CHECK(std::abs(naive_variance(st.rho.matrix(), q.y.matrix()) - 0.5) < 1e-8);
    CHECK(st.truncation.trace_deficit <= 1e-12);
  }
  // alpha = 2: <N> = 4 at a generous cutoff
  const FockSpace s(40);
  CHECK(std::abs(expect(coherent_state(2.0, s).rho, number_operator(s)) - 4.0) < 1e-10);
}

TEST_CASE("truncation deficit matches the Poisson tail and is monotone") {
  const Complex alpha(3.0, 0.0);
  double previous = 1.0;
  for (int c = 30; c <= 44; ++c) {
    const FockState st = coherent_state(alpha, FockSpace(c));
    CHECK(st.truncation.trace_deficit == doctest::Approx(poisson_tail(9.0, c)).epsilon(1e-6));
    CHECK(st.truncation.trace_deficit <= previous);
    previous = st.truncation.trace_deficit;
  }
  CHECK_THROWS_AS(coherent_state(5.0, FockSpace(10)), TruncationError);
  CHECK_THROWS_AS(squeezed_vacuum(2.0, FockSpace(10)), TruncationError);
  CHECK_THROWS_AS(thermal_state(0.9, FockSpace(10)), TruncationError);
}

TEST_CASE("squeezed vacuum") {
  const double r = 0.5;
  const FockSpace s = space_for_squeezed(r);
  const FockState st = squeezed_vacuum(r, s);
  const Quadratures q = quadratures(s);
  const double vx = naive_variance(st.rho.matrix(), q.x.matrix());
  const double vy = naive_variance(st.rho.matrix(), q.y.matrix());
  CHECK(std::abs(vy - std::exp(-1.0) / 2.0) < 1e-9);
  CHECK(std::abs(vx - std::exp(1.0) / 2.0) < 1e-9);
  CHECK(std::abs(std::sqrt(vx * vy) - 0.5) < 1e-9);
  CHECK(std::abs(expect(st.rho, number_operator(s)) - std::sinh(r) * std::sinh(r)) < 1e-9);
  // amplitudes on even levels from the factorial formula
  for (int m = 0; 2 * m < 20; ++m) {
    const double amp = squeezed_even_amp(r, m);
    CHECK(std::abs(st.rho.matrix()(2 * m, 0).real() - amp * squeezed_even_amp(r, 0)) < 1e-12);
    if (2 * m + 1 < s.cutoff()) CHECK(std::abs(st.rho.matrix()(2 * m + 1, 2 * m + 1)) < 1e-15);
  }
}

TEST_CASE("thermal state") {
  for (const double xi : {0.0, 1.0 / 3.0, 0.5, 0.8}) {
    const FockSpace s = space_for_thermal(xi);
    const FockState st = thermal_state(xi, s);
    CHECK(std::abs(expect(st.rho, number_operator(s)) - xi / (1.0 - xi)) < 1e-9);
    CHECK(std::abs(st.rho.purity() - (1.0 - xi) / (1.0 + xi)) < 1e-9);
    for (Index n = 0; n < 5; ++n) CHECK(std::abs(st.rho.matrix()(n, n).real() - (1 - xi) * std::pow(xi, double(n))) < 1e-12);
  }
  CHECK_THROWS_AS(thermal_state(1.0, FockSpace(10)), DomainError);
  CHECK_THROWS_AS(thermal_state(-0.1, FockSpace(10)), DomainError);
}

TEST_CASE("displaced squeezed state") {
  const double x0 = 1.5;
  const double r = 0.4;
  const FockSpace s(60);
  const FockState st = displaced_squeezed(x0, r, s);
  const Quadratures q = quadratures(s);
  CHECK(std::abs(expect(st.rho, q.x) - x0) < 1e-9);
  CHECK(std::abs(expect(st.rho, q.y)) < 1e-9);
  CHECK(std::abs(naive_variance(st.rho.matrix(), q.x.matrix()) - std::exp(2 * r) / 2) < 1e-8);
  CHECK(std::abs(naive_variance(st.rho.matrix(), q.y.matrix()) - std::exp(-2 * r) / 2) < 1e-8);
  // pure
  CHECK(std::abs(st.rho.purity() - 1.0) < 1e-10);
  // same state through the general Gaussian builder
  const FockState g = gaussian_state(x0, 0.0, std::sqrt(std::exp(2 * r) / 2), std::sqrt(std::exp(-2 * r) / 2), s);
  CHECK(std::abs((st.rho.matrix() * g.rho.matrix()).trace().real() - 1.0) < 1e-9);
}

TEST_CASE("general Gaussian builder reproduces its moments") {
  struct Case {
    double mx, my, dx, dy;
  };
  for (const Case c : {Case{0.0, 0.0, 1.0, 1.0}, Case{1.0, -0.5, 0.9, 0.8}, Case{2.0, 0.0, 1.6, 0.4}, Case{0.0, 1.2, 0.5, 1.7}}) {
    const FockSpace s = space_for_gaussian(c.mx, c.my, c.dx, c.dy);
    const FockState st = gaussian_state(c.mx, c.my, c.dx, c.dy, s);
    const Quadratures q = quadratures(s);
    CHECK(std::abs(expect(st.rho, q.x) - c.mx) < 1e-8);
    CHECK(std::abs(expect(st.rho, q.y) - c.my) < 1e-8);
    CHECK(std::abs(naive_variance(st.rho.matrix(), q.x.matrix()) - c.dx * c.dx) < 1e-7);
    CHECK(std::abs(naive_variance(st.rho.matrix(), q.y.matrix()) - c.dy * c.dy) < 1e-7);
    const double n_expected = 0.5 * (c.dx * c.dx + c.dy * c.dy - 1.0) + 0.5 * (c.mx * c.mx + c.my * c.my);
    CHECK(std::abs(expect(st.rho, number_operator(s)) - n_expected) < 1e-7);
    CHECK(std::abs(st.rho.purity() - 1.0 / (2.0 * c.dx * c.dy)) < 1e-8);
  }
  // against dense exponentials of the ladder operators
  for (const Case c : {Case{0.7, -0.4, 1.1, 0.9}, Case{1.5, 0.0, 1.4, 0.36}, Case{0.0, 0.8, 0.6, 1.2}}) {
    const Index cutoff = 40;
    const FockState st = gaussian_state(c.mx, c.my, c.dx, c.dy, FockSpace(cutoff));
    const ComplexMatrix oracle = gaussian_by_exponentials(c.mx, c.my, c.dx, c.dy, cutoff);
    CHECK(max_entry(st.rho.matrix() * (1.0 - st.truncation.trace_deficit) - oracle) < 1e-10);
  }
  // symmetric widths give the thermal state
  const double xi = 0.4;
  const double w = std::sqrt(0.5 * (1 + xi) / (1 - xi));
  const FockSpace s(50);
  CHECK(max_entry(gaussian_state(0, 0, w, w, s).rho.matrix() - thermal_state(xi, s).rho.matrix()) < 1e-10);
  CHECK_THROWS_AS(gaussian_state(0, 0, 0.5, 0.5, s), DomainError);
  CHECK_THROWS_AS(gaussian_state(0, 0, -1.0, 1.0, s), DomainError);
}

TEST_CASE("two-mode coherent product has Var Jz = |alpha|^2 + |beta|^2") {
  const FockSpace s(25);
  const DensityMatrix rho = two_mode(coherent_state(1.0, s).rho, coherent_state(1.0, s).rho);
  const Observable j = jz(s, s);
  CHECK(std::abs(naive_variance(rho.matrix(), j.matrix()) - 2.0) < 1e-9);
  CHECK(std::abs(expect(rho, total_number(s, s)) - 2.0) < 1e-9);
  CHECK(j.is_diagonal());
  CHECK_THROWS_AS(jz(FockSpace(100), FockSpace(100)), DimensionError);
}

TEST_CASE("cutoff helpers") {
  CHECK(default_cutoff(0.0) == 20);
  CHECK(default_cutoff(100.0) == static_cast<Index>(std::ceil(100.0 + 8.0 * std::sqrt(101.0) + 10.0)));
  CHECK(coherent_state(Complex(3.0, 2.0), space_for_coherent(Complex(3.0, 2.0))).truncation.trace_deficit <= 1e-12);
  CHECK(squeezed_vacuum(1.2, space_for_squeezed(1.2)).truncation.trace_deficit <= 1e-12);
  CHECK(thermal_state(0.7, space_for_thermal(0.7)).truncation.trace_deficit <= 1e-12);
  const FockSpace g = space_for_gaussian(1.0, 0.0, 1.5, 0.6);
  CHECK(gaussian_state(1.0, 0.0, 1.5, 0.6, g).truncation.trace_deficit <= 1e-11);
}
