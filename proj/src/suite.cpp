#include "hsres/suite.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <random>

#include "hsres/fock.hpp"
#include "hsres/gaussian.hpp"
#include "hsres/measures.hpp"
#include "hsres/pmix.hpp"
#include "hsres/probe_design.hpp"
#include "hsres/random.hpp"

namespace hsres {

namespace {

constexpr const char* kTitles[kCriterionCount] = {
    "coherent-state baselines",
    "variance bound",
    "formula equivalence",
    "thermal Fisher information",
    "thermal skew information",
    "2x2 counterexample",
    "squeezed-vacuum quadrature product",
    "Gaussian closed forms vs Fock numerics",
    "optimization targets",
    "nonclassicality contrapositive",
    "weak-value form",
    "small-signal limit",
    "optimum generator",
    "two-level closed form",
};

std::string tag(const char* prefix, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%g", prefix, v);
  return buf;
}

class Recorder {
 public:
  explicit Recorder(std::vector<Check>& out) : out_(out) {}

  void near(std::string id, std::string desc, std::string anchor, double computed, double expected,
            double tol) {
    push(std::move(id), std::move(desc), std::move(anchor), computed, expected, tol,
         std::abs(computed - expected) <= tol);
  }
  /// computed <= bound + tol
  void at_most(std::string id, std::string desc, std::string anchor, double computed, double bound,
               double tol) {
    push(std::move(id), std::move(desc), std::move(anchor), computed, bound, tol, computed <= bound + tol);
  }
  /// computed >= bound - tol
  void at_least(std::string id, std::string desc, std::string anchor, double computed, double bound,
                double tol) {
    push(std::move(id), std::move(desc), std::move(anchor), computed, bound, tol, computed >= bound - tol);
  }
  void flag(std::string id, std::string desc, std::string anchor, bool ok) {
    push(std::move(id), std::move(desc), std::move(anchor), ok ? 1.0 : 0.0, 1.0, 0.0, ok);
  }

 private:
  void push(std::string id, std::string desc, std::string anchor, double c, double e, double t, bool pass) {
    if (!std::isfinite(c)) pass = false;
    out_.push_back({std::move(id), std::move(desc), std::move(anchor), c, e, t, pass});
  }
  std::vector<Check>& out_;
};

class Suite {
 public:
  Suite(const SuiteOptions& o, std::vector<Check>& out) : opt_(o), rec_(out) {}

  void run() {
    coherent_baselines();
    variance_bound();
    formula_equivalence();
    thermal_fisher_and_skew();
    counterexample();
    squeezed_product();
    gaussian_closed_forms();
    optimization();
    witnesses();
    weak_values();
    small_signal();
    optimum_generator();
    two_level();
    local_constants();
  }

 private:
  Rng stream(int k) const {
    std::seed_seq seq{std::uint32_t(opt_.seed), std::uint32_t(opt_.seed >> 32), std::uint32_t(k)};
    return Rng(seq);
  }

  double lam(const DensityMatrix& rho, const Observable& g) const {
    return opt_.corrupt_lambda_sign ? tilde_lambda_sq(rho, g) : lambda_sq(rho, g);
  }

  void coherent_baselines() {
    for (const double a : {0.5, 1.0, 2.0}) {
      const FockSpace s(default_cutoff(a * a));
      const DensityMatrix rho = coherent_state(a, s).rho;
      rec_.near(tag("acc01.coherent_x.alpha=", a), "Lambda^2 of a coherent probe under X", "Λ²(|α⟩,X) = 1/2",
                lam(rho, quadratures(s).x), 0.5, 1e-5);
      rec_.near(tag("acc01.coherent_n.alpha=", a), "Lambda^2 of a coherent probe under N", "Λ²(|α⟩,N) = |α|²",
                lam(rho, number_operator(s)), a * a, 1e-5);
    }
  }

  void variance_bound() {
    Rng rng = stream(2);
    std::uniform_int_distribution<int> dim(2, 16);
    double worst_excess = -1e300;
    double worst_pure = 0.0;
    int pure = 0;
    for (int t = 0; t < 1000; ++t) {
      const Index d = dim(rng);
      const Index rank = (t % 4 == 0) ? 1 : 1 + Index(rng() % d);
      const DensityMatrix rho = random_density_of_rank(d, rank, rng);
      const Observable g = random_hermitian(d, rng);
      const double l = lam(rho, g);
      const double v = variance(rho, g);
      worst_excess = std::max(worst_excess, l - v);
      if (rho.purity() > 1.0 - 1e-10) {
        ++pure;
        worst_pure = std::max(worst_pure, std::abs(l - v));
      }
    }
    rec_.at_most("acc02.bound_max_excess", "max of Lambda^2 - Var over 1000 random pairs, dims 2-16",
                 "Λ²(ρ,G) ≤ (Δ_ρG)²", worst_excess, 0.0, 1e-9);
    rec_.at_most("acc02.pure_equality", "max |Lambda^2 - Var| over the pure probes of the same ensemble",
                 "ρ² = ρ ⇒ Λ²(ρ,G) = (Δ_ρG)²", worst_pure, 0.0, 1e-9);
    rec_.at_least("acc02.pure_count", "pure probes present in the ensemble (at least 200)", "ensemble composition",
                  pure, 200.0, 0.0);
  }

  void formula_equivalence() {
    Rng rng = stream(3);
    std::uniform_int_distribution<int> dim(2, 12);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Index d = dim(rng);
      const DensityMatrix rho = random_density_of_rank(d, 1 + Index(rng() % d), rng);
      const Observable g = random_hermitian(d, rng);
      const double v[4] = {lam(rho, g), lambda_sq_commutator(rho, g), lambda_sq_spectral_g(rho, g),
                           lambda_sq_spectral_rho(rho, g)};
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) worst = std::max(worst, std::abs(v[i] - v[j]));
    }
    rec_.at_most("acc03.pairwise_max_diff",
                 "max pairwise difference of trace, commutator and both spectral forms on 100 random pairs",
                 "tr(ρ²G²) − tr(ρGρG) = −½tr([ρ,G]²) = ½Σ(g_j−g_k)²|ρ_kj|² = ½Σ(r_j−r_k)²|G_kj|²", worst, 0.0,
                 1e-8);
  }

  void thermal_fisher_and_skew() {
    std::vector<double> products;
    double worst_order = -1e300;
    for (int i = 1; i <= 9; ++i) {
      const double xi = 0.1 * i;
      const FockSpace s = space_for_thermal(xi);
      const DensityMatrix rho = thermal_state(xi, s).rho;
      const Quadratures q = quadratures(s);
      const double fx = fisher_info(rho, q.x);
      const double fy = fisher_info(rho, q.y);
      rec_.near(tag("acc04.fisher_x.xi=", xi), "quantum Fisher information of a thermal probe under X",
                "I_F(ρ_ξ,X) = (1−ξ)/(2(1+ξ))", fx, (1 - xi) / (2 * (1 + xi)), 1e-4);
      products.push_back(fx * fy);
      const double wx = skew_info(rho, q.x);
      const double sx = std::sqrt(xi);
      rec_.near(tag("acc05.skew_x.xi=", xi), "Wigner-Yanase skew information of a thermal probe under X",
                "I_W(ρ_ξ,X) = (1−√ξ)/(2(1+√ξ))", wx, (1 - sx) / (2 * (1 + sx)), 1e-4);
      worst_order = std::max({worst_order, wx - fx, skew_info(rho, q.y) - fy});
    }
    int rises = 0;
    for (std::size_t i = 1; i < products.size(); ++i)
      if (!(products[i] < products[i - 1])) ++rises;
    rec_.near("acc04.fisher_product_decreasing", "non-decreasing steps of I_F(X) I_F(Y) over xi = 0.1..0.9",
              "I_F(ρ,X) I_F(ρ,Y) → 0 as ξ → 1", rises, 0.0, 0.0);
    rec_.at_most("acc04.fisher_product_xi=0.9", "I_F(X) I_F(Y) at xi = 0.9", "I_F(ρ,X) I_F(ρ,Y) → 0 as ξ → 1",
                 products.back(), 1e-3, 0.0);

    Rng rng = stream(5);
    for (int t = 0; t < 200; ++t) {
      const Index d = 2 + Index(t % 11);
      const DensityMatrix rho = random_density(d, rng);
      const Observable g = random_hermitian(d, rng);
      worst_order = std::max(worst_order, skew_info(rho, g) - fisher_info(rho, g));
    }
    rec_.at_most("acc05.skew_below_fisher",
                 "max of I_W - I_F over the thermal grid and 200 random pairs", "I_W(ρ,A) ≤ I_F(ρ,A)",
                 worst_order, 0.0, 1e-9);
  }

  void counterexample() {
    const CounterexampleReport r = counterexample_check();
    const char* anchor = "ρ = diag(0.75, 0.25): I_W(ρ,σ_x) = I_W(ρ,σ_y) = 0.134";
    rec_.near("acc06.skew_sigma_x", "I_W(diag(0.75,0.25), sigma_x)", anchor, r.skew_x, 0.134, 1e-3);
    rec_.near("acc06.skew_sigma_y", "I_W(diag(0.75,0.25), sigma_y)", anchor, r.skew_y, 0.134, 1e-3);
    rec_.near("acc06.commutator_term", "|tr(rho [sigma_x, sigma_y])|^2", "|tr(ρ[σ_x,σ_y])|² = 1", r.right, 1.0, 0.0);
    rec_.at_most("acc06.product_term", "4 I_W(sigma_x) I_W(sigma_y) stays below the commutator term",
                 "4 I_W(ρ,σ_x) I_W(ρ,σ_y) < |tr(ρ[σ_x,σ_y])|²", r.left, r.right, 0.0);
    rec_.flag("acc06.violated", "uncertainty-type inequality fails for this probe",
              "4 I_W I_W ≥ |tr(ρ[A,B])|² does not hold", r.violated);
  }

  void squeezed_product() {
    for (const double r : {0.5, 1.0, 1.5}) {
      const FockSpace s = space_for_squeezed(r);
      const DensityMatrix rho = squeezed_vacuum(r, s).rho;
      const Quadratures q = quadratures(s);
      const double vx = variance(rho, q.x);
      const double vy = variance(rho, q.y);
      rec_.near(tag("acc07.product.r=", r), "sqrt(Lambda^2(X) Lambda^2(Y)) for a squeezed vacuum",
                "Λ(ρ,X)Λ(ρ,Y) = 1/(8(ΔX)²(ΔY)²)", std::sqrt(lam(rho, q.x) * lam(rho, q.y)),
                1.0 / (8.0 * vx * vy), 1e-4);
    }
    // Mixed Gaussians: the product has no positive lower bound.
    std::vector<double> prod;
    for (const double xi : {0.0, 0.3, 0.6, 0.9}) {
      const FockSpace s = space_for_thermal(xi);
      const DensityMatrix rho = thermal_state(xi, s).rho;
      const Quadratures q = quadratures(s);
      prod.push_back(std::sqrt(lam(rho, q.x) * lam(rho, q.y)));
    }
    int rises = 0;
    for (std::size_t i = 1; i < prod.size(); ++i)
      if (!(prod[i] < prod[i - 1])) ++rises;
    rec_.near("extra.thermal_product_decreasing",
              "non-decreasing steps of Lambda(X) Lambda(Y) over thermal xi = 0, 0.3, 0.6, 0.9",
              "Λ(ρ,X)Λ(ρ,Y) = 1/(8(ΔX)²(ΔY)²) → 0 for broad mixed probes", rises, 0.0, 0.0);
    rec_.at_most("extra.thermal_product_xi=0.9", "Lambda(X) Lambda(Y) at thermal xi = 0.9",
                 "Λ(ρ,X)Λ(ρ,Y) = 1/(8(ΔX)²(ΔY)²)", prod.back(), 0.01, 0.0);
  }

  void gaussian_closed_forms() {
    Rng rng = stream(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_disp = 0.0, worst_phase = 0.0, worst_lambda = 0.0, worst_purity = 0.0;
    int built = 0;
    while (built < 50) {
      const double p = 0.5 + 2.5 * u(rng);
      const double r = -1.0 + 2.0 * u(rng);
      const double dx = std::sqrt(p * std::exp(2 * r));
      const double dy = std::sqrt(p * std::exp(-2 * r));
      const double spare = 10.0 - 0.5 * (dx * dx + dy * dy - 1.0);
      if (spare < 0) continue;
      const double x0 = (u(rng) < 0.5 ? -1.0 : 1.0) * std::sqrt(2.0 * spare * u(rng));
      const double chi = 0.05 + 0.95 * u(rng);
      ++built;
      const AxisAlignedGaussian g(x0, 0.0, dx, dy);
      const FockSpace s = space_for_gaussian(x0, 0.0, dx, dy);
      const DensityMatrix rho = gaussian_state(x0, 0.0, dx, dy, s).rho;
      const Quadratures q = quadratures(s);
      const Observable n = number_operator(s);
      worst_disp = std::max(worst_disp, std::abs(hs_displacement(g, chi) - hs_distance_sq(rho, evolve(rho, q.x, chi))));
      worst_phase = std::max(worst_phase, std::abs(hs_phase(g, chi) - hs_distance_sq(rho, evolve(rho, n, chi))));
      worst_lambda = std::max({worst_lambda, std::abs(lambda_x_gauss(g) - lam(rho, q.x)),
                               std::abs(lambda_y_gauss(g) - lam(rho, q.y)), std::abs(lambda_n_gauss(g) - lam(rho, n))});
      worst_purity = std::max(worst_purity, std::abs(rho.purity() - 1.0 / (2.0 * g.purity_factor())));
    }
    rec_.at_most("acc08.hs_displacement_max_err",
                 "max |closed form - Fock| HS distance under displacement, 50 random Gaussians with <N> <= 10",
                 "d²_HS = (1/p)(1 − exp[−χ²/(4(ΔY)²)])", worst_disp, 0.0, 1e-5);
    rec_.at_most("acc08.hs_phase_max_err",
                 "max |closed form - Fock| HS distance under phase rotation, same 50 Gaussians",
                 "d²_HS = (1/p)(1 − e^A/√B)", worst_phase, 0.0, 1e-5);
    rec_.at_most("extra.gaussian_lambda_max_err", "max |closed form - Fock| Lambda^2 for X, Y, N on the same Gaussians",
                 "Λ²(ρ,X) = 1/(8ΔX(ΔY)³), Λ²(ρ,Y) = 1/(8ΔY(ΔX)³), Λ²(ρ,N) = ([ΔX²−ΔY²]² + 2x₀²ΔX²)/(16ΔX³ΔY³)",
                 worst_lambda, 0.0, 1e-5);
    rec_.at_most("extra.gaussian_purity_max_err", "max |tr(rho^2) - 1/(2p)| on the same Gaussians",
                 "tr(ρ²) = 1/(2p)", worst_purity, 0.0, 1e-6);

    // Number-generator closed form at two reference points.
    const FockSpace sq = space_for_squeezed(1.0);
    rec_.near("extra.lambda_n_squeezed_r=1", "closed-form Lambda^2(rho, N) vs Fock for squeezed vacuum r = 1",
              "Λ²(ρ,N) = ([ΔX²−ΔY²]² + 2x₀²ΔX²)/(16ΔX³ΔY³)", lambda_n_gauss(AxisAlignedGaussian::squeezed_vacuum(1.0)),
              lam(squeezed_vacuum(1.0, sq).rho, number_operator(sq)), 1e-5);
    const double n50 = 50.0;
    const FockSpace cs = space_for_coherent(std::sqrt(n50));
    rec_.near("extra.coherent_phase_point_n=50", "Fock Lambda^2(|alpha>, N) at n = 50 (coherent point of the phase task)",
              "Λ²(|α⟩,N) = (Δ_αN)² = n", lam(coherent_state(std::sqrt(n50), cs).rho, number_operator(cs)), n50, 1e-6);
  }

  void optimization() {
    const GaussianOptimum d = optimize_displacement(50.0);
    const GaussianOptimum ph = optimize_phase(50.0);
    rec_.near("acc09.displacement_n=50", "optimized Lambda^2(rho, X) at n = 50, within 1% of 2n",
              "Λ²(ρ,X) ≃ 2n", d.lambda_sq, 100.0, 1.0);
    rec_.near("acc09.phase_n=50", "optimized Lambda^2(rho, N) at n = 50, within 5% of n^2",
              "Λ²(ρ,N) ≃ n²", ph.lambda_sq, 2500.0, 125.0);
    rec_.near("extra.displacement_exact_n=50", "optimized Lambda^2(rho, X) vs exact optimum (S + sqrt(S^2-1))/2, S = 2n+1",
              "max Λ²(ρ,X) at p = 1/2, x₀ = 0", d.lambda_sq, d.analytic_lambda_sq, 1e-6 * d.analytic_lambda_sq);
    rec_.near("extra.phase_exact_n=50", "optimized Lambda^2(rho, N) vs exact optimum (S^2-1)/2 = 2n(n+1)",
              "max Λ²(ρ,N) at p = 1/2, x₀ = 0", ph.lambda_sq, ph.analytic_lambda_sq, 1e-6 * ph.analytic_lambda_sq);

    Rng rng = stream(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double s = 101.0;
    double best_disp = 0.0, best_phase = 0.0;
    for (int tried = 0; tried < 10000;) {
      const double p = 0.5 + 2.5 * u(rng);
      const double b = std::exp(std::log(1e-4) + u(rng) * (std::log(s) - std::log(1e-4)));
      const double a = p * p / b;
      if (a + b > s) continue;
      ++tried;
      best_disp = std::max(best_disp, lambda_x_gauss(AxisAlignedGaussian(std::sqrt(s - a - b), 0.0, std::sqrt(a), std::sqrt(b))));
    }
    for (int tried = 0; tried < 10000;) {
      const double t = s * u(rng);
      const double p = 0.5 + 2.5 * u(rng);
      const double rest = s - t;
      const double disc = rest * rest - 4 * p * p;
      if (disc < 0) continue;
      const double a = 0.5 * (rest + (u(rng) < 0.5 ? -1 : 1) * std::sqrt(disc));
      const double b = rest - a;
      if (a <= 0 || b <= 0) continue;
      ++tried;
      best_phase = std::max(best_phase, lambda_n_gauss(AxisAlignedGaussian(std::sqrt(t), 0.0, std::sqrt(a), std::sqrt(b))));
    }
    rec_.at_most("acc09.displacement_unbeaten", "best of 1e4 random feasible Gaussians at n = 50 (X task)",
                 "maximum at minimum p", best_disp, d.lambda_sq, 1e-9);
    rec_.at_most("acc09.phase_unbeaten", "best of 1e4 random feasible Gaussians at n = 50 (N task)",
                 "maximum at minimum p and x₀ = 0", best_phase, ph.lambda_sq, 1e-9);
    rec_.near("acc09.displacement_p", "purity factor p of the X optimum", "p = 1/2", d.state.purity_factor(), 0.5, 1e-6);
    rec_.near("acc09.phase_p", "purity factor p of the N optimum", "p = 1/2", ph.state.purity_factor(), 0.5, 1e-6);
    rec_.near("acc09.displacement_x0", "mean <X> of the X optimum (square root of a vanishing energy remainder)",
              "x₀ = 0", d.state.mean_x(), 0.0, 1e-3);
    rec_.near("acc09.phase_x0", "mean <X> of the N optimum", "x₀ = 0", ph.state.mean_x(), 0.0, 1e-6);

    const double n = 100.0;
    for (const auto& [name, o] : {std::pair{"displacement", optimize_displacement(n)}, std::pair{"phase", optimize_phase(n)}}) {
      const double dy2 = o.state.dy() * o.state.dy();
      const double dx2 = o.state.dx() * o.state.dx();
      rec_.near(std::string("acc09.") + name + "_dy2_n=100", "(Delta Y)^2 of the optimum relative to 1/(8n)",
                "(ΔY)² ≃ 1/(8n)", dy2 * 8.0 * n, 1.0, 0.05);
      rec_.near(std::string("acc09.") + name + "_dx2_n=100", "(Delta X)^2 of the optimum relative to 2n",
                "(ΔX)² ≃ 2n", dx2 / (2.0 * n), 1.0, 0.05);
    }
  }

  static Complex in_disk(double radius, Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(radius * std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
  }

  void witnesses() {
    Rng rng = stream(10);
    int flagged_x = 0, flagged_n = 0, flagged_jz = 0;
    for (int t = 0; t < 500; ++t) {
      const std::size_t k = 1 + rng() % 5;
      std::vector<Complex> amps(k);
      for (auto& a : amps) a = in_disk(2.0, rng);
      const CoherentMixture mix(random_simplex(k, rng), amps);
      const FockSpace s = space_for_mixture(mix);
      const DensityMatrix rho = to_density(mix, s).rho;
      if (witness_displacement(rho, quadratures(s).x).verdict == Verdict::nonclassical) ++flagged_x;
      if (witness_number(rho, number_operator(s)).verdict == Verdict::nonclassical) ++flagged_n;

      std::vector<TwoModeCoherentMixture::Pair> pairs(k);
      double r1 = 0.0, r2 = 0.0;
      for (auto& p : pairs) {
        p = {in_disk(2.0, rng), in_disk(2.0, rng)};
        r1 = std::max(r1, std::abs(p[0]));
        r2 = std::max(r2, std::abs(p[1]));
      }
      const TwoModeCoherentMixture two(random_simplex(k, rng), pairs);
      const FockSpace s1 = space_for_coherent(r1, 1e-10);
      const FockSpace s2 = space_for_coherent(r2, 1e-10);
      if (witness_jz(to_density(two, s1, s2).rho, s1, s2).verdict == Verdict::nonclassical) ++flagged_jz;
    }
    const char* anchor = "positive P(α) ⇒ no super-coherent resolution";
    rec_.near("acc10.mixtures_flagged_x", "coherent mixtures flagged by the X witness (500 random)", anchor, flagged_x, 0, 0);
    rec_.near("acc10.mixtures_flagged_n", "coherent mixtures flagged by the N witness (500 random)", anchor, flagged_n, 0, 0);
    rec_.near("acc10.mixtures_flagged_jz", "two-mode coherent mixtures flagged by the Jz witness (500 random)", anchor,
              flagged_jz, 0, 0);

    for (const double r : {0.3, 0.5, 1.0}) {
      const FockSpace s = space_for_squeezed(r);
      const DensityMatrix rho = squeezed_vacuum(r, s).rho;
      rec_.flag(tag("acc10.squeezed_x.r=", r), "X witness flags squeezed vacuum", "Λ²(ρ,X) > 1/2 ⇒ nonclassical",
                witness_displacement(rho, quadratures(s).x).verdict == Verdict::nonclassical);
      rec_.flag(tag("acc10.squeezed_n.r=", r), "N witness flags squeezed vacuum", "Λ²(ρ,N) > tr(Nρ) ⇒ nonclassical",
                witness_number(rho, number_operator(s)).verdict == Verdict::nonclassical);
    }
    const FockSpace s1 = space_for_squeezed(1.0);
    const FockSpace s2(2);
    const DensityMatrix prod = two_mode(squeezed_vacuum(1.0, s1).rho, DensityMatrix::pure(ComplexVector::Unit(2, 0)));
    rec_.flag("acc10.squeezed_vacuum_jz.r=1", "Jz witness flags squeezed vacuum (x) vacuum",
              "Λ²(ρ,J_z) > tr[(N₁+N₂)ρ] ⇒ nonclassical", witness_jz(prod, s1, s2).verdict == Verdict::nonclassical);

    const FockSpace c = space_for_coherent(1.0);
    const DensityMatrix coh = coherent_state(1.0, c).rho;
    rec_.near("acc10.coherent_boundary_x", "X witness margin for a coherent probe (boundary case)",
              "Λ²(|α⟩,X) = 1/2", witness_displacement(coh, quadratures(c).x).margin(), 0.0, 1e-6);
    rec_.near("acc10.coherent_boundary_n", "N witness margin for a coherent probe (boundary case)",
              "Λ²(|α⟩,N) = ⟨α|N|α⟩", witness_number(coh, number_operator(c)).margin(), 0.0, 1e-6);
  }

  void weak_values() {
    Rng rng = stream(11);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const std::size_t k = 1 + rng() % 5;
      std::vector<Complex> amps(k);
      for (auto& a : amps) a = in_disk(2.0, rng);
      const CoherentMixture mix(random_simplex(k, rng), amps);
      const FockSpace s = space_for_mixture(mix);
      const DensityMatrix rho = to_density(mix, s).rho;
      worst = std::max({worst, std::abs(lambda_sq_weak(mix, WeakGenerator::x) - lam(rho, quadratures(s).x)),
                        std::abs(lambda_sq_weak(mix, WeakGenerator::n) - lam(rho, number_operator(s)))});
    }
    rec_.at_most("acc11.weak_vs_fock_max_err", "max |weak-value sum - Fock Lambda^2| for X and N on 100 random mixtures",
                 "Λ² = ΣΣ w_j w_k |⟨α_j|α_k⟩|² [G⁽²⁾ − |G⁽¹⁾|²]", worst, 0.0, 1e-6);
  }

  void small_signal() {
    const double chi = 1e-3;
    auto ratio = [&](const DensityMatrix& rho, const Observable& g) {
      return hs_distance_sq(rho, evolve(rho, g, chi)) / (2.0 * chi * chi * lam(rho, g));
    };
    const char* anchor = "d²_HS ≃ 2χ²Λ²(ρ,G)";
    {
      const FockSpace s = space_for_coherent(1.0);
      rec_.near("acc12.coherent_x", "small-signal ratio, coherent alpha = 1, G = X", anchor,
                ratio(coherent_state(1.0, s).rho, quadratures(s).x), 1.0, 1e-3);
    }
    {
      const FockSpace s = space_for_squeezed(0.5);
      rec_.near("acc12.squeezed_n", "small-signal ratio, squeezed vacuum r = 0.5, G = N", anchor,
                ratio(squeezed_vacuum(0.5, s).rho, number_operator(s)), 1.0, 1e-3);
    }
    {
      const FockSpace s = space_for_thermal(0.5);
      rec_.near("acc12.thermal_y", "small-signal ratio, thermal xi = 0.5, G = Y", anchor,
                ratio(thermal_state(0.5, s).rho, quadratures(s).y), 1.0, 1e-3);
    }
    {
      const FockSpace s(60);
      rec_.near("acc12.displaced_squeezed_n", "small-signal ratio, displaced squeezed x0 = 1, r = 0.3, G = N", anchor,
                ratio(displaced_squeezed(1.0, 0.3, s).rho, number_operator(s)), 1.0, 1e-3);
    }
    {
      Rng rng = stream(12);
      const DensityMatrix rho = random_density(4, rng);
      rec_.near("acc12.random_qudit", "small-signal ratio, random 4-level probe and generator", anchor,
                ratio(rho, random_hermitian(4, rng)), 1.0, 1e-3);
    }
  }

  void optimum_generator() {
    Rng rng = stream(13);
    double worst = 0.0;
    int violations = 0;
    double worst_margin = 1e300;
    for (int t = 0; t < 20; ++t) {
      const Index d = 2 + Index(rng() % 11);
      const DensityMatrix rho = random_density_of_rank(d, 1 + Index(rng() % d), rng);
      const GeneratorOptimum o = optimum_pure_generator(rho);
      if (!o.generator) {
        ++violations;
        continue;
      }
      worst = std::max(worst, std::abs(lam(rho, *o.generator) - std::pow(o.r_max - o.r_min, 2) / 4.0));
      const OptimalityReport r = verify_generator_optimality(rho, 1000, rng());
      violations += r.violations;
      worst_margin = std::min(worst_margin, r.margin);
    }
    rec_.at_most("acc13.closed_form_max_err", "max |Lambda^2(rho, G_opt) - (r_max - r_min)^2/4| on 20 random probes",
                 "Λ²(ρ,G_opt) = (r_max − r_min)²/4", worst, 0.0, 1e-10);
    rec_.near("acc13.random_generator_wins", "random pure-projector generators beating G_opt (20 probes x 1000)",
              "|ψ⟩ = (|r_max⟩ + |r_min⟩)/√2 is optimal", violations, 0, 0);
    rec_.at_least("acc13.min_margin", "smallest Lambda^2(G_opt) - best random Lambda^2 over the 20 probes",
                  "|ψ⟩ = (|r_max⟩ + |r_min⟩)/√2 is optimal", worst_margin, 0.0, 1e-9);
  }

  void two_level() {
    Rng rng = stream(14);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const double q = u(rng);
      const Complex mu = std::polar(std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
      const double g1 = 4.0 * u(rng) - 2.0;
      const double g2 = 4.0 * u(rng) - 2.0;
      ComplexMatrix g = ComplexMatrix::Zero(2, 2);
      g(0, 0) = g1;
      g(1, 1) = g2;
      worst = std::max(worst, std::abs(two_level_lambda(q, mu, g1, g2) - lam(two_level_state(q, mu), Observable(g))));
    }
    rec_.at_most("acc14.two_level_max_err", "max |closed form - direct Lambda^2| on 1000 random qubit draws",
                 "Λ²(ρ,G) = q(1−q)(g₁−g₂)²|μ|²", worst, 0.0, 1e-12);
  }

  void local_constants() {
    const double chi = 1e-3;
    const FockSpace s = space_for_thermal(0.5);
    const DensityMatrix th = thermal_state(0.5, s).rho;
    const Observable x = quadratures(s).x;
    const double c0 = bures_distance_sq(th, evolve(th, x, chi)) / (chi * chi * fisher_info(th, x));
    rec_.near("extra.bures_fisher_constant", "measured d_B^2 / (chi^2 I_F), thermal xi = 0.5, G = X, chi = 1e-3",
              "d²_B ≃ c χ² I_F", c0, 1.0, 1e-3);
    Rng rng = stream(15);
    double spread = 0.0;
    double hell = 0.0;
    for (int t = 0; t < 5; ++t) {
      const DensityMatrix rho = random_density(3 + t, rng);
      const Observable g = random_hermitian(3 + t, rng);
      const DensityMatrix moved = evolve(rho, g, chi);
      spread = std::max(spread, std::abs(bures_distance_sq(rho, moved) / (chi * chi * fisher_info(rho, g)) - c0));
      hell = std::max(hell, std::abs(hellinger_distance(rho, moved) / (chi * chi * skew_info(rho, g)) - 2.0));
    }
    rec_.at_most("extra.bures_fisher_constant_spread", "max deviation of the measured constant across 5 random pairs",
                 "d²_B ≃ c χ² I_F", spread, 0.0, 1e-3);
    rec_.at_most("extra.hellinger_skew_constant", "max |d_H / (chi^2 I_W) - 2| across 5 random pairs",
                 "d_H ≃ 2χ² I_W", hell, 0.0, 1e-3);
  }

  SuiteOptions opt_;
  Recorder rec_;
};

}  // namespace

const char* criterion_title(int number) {
  if (number < 1 || number > kCriterionCount) return "extra checks";
  return kTitles[number - 1];
}

int criterion_of(const std::string& check_id) {
  if (check_id.size() < 6 || check_id.compare(0, 3, "acc") != 0 || check_id[5] != '.') return 0;
  if (!std::isdigit(static_cast<unsigned char>(check_id[3])) || !std::isdigit(static_cast<unsigned char>(check_id[4])))
    return 0;
  return (check_id[3] - '0') * 10 + (check_id[4] - '0');
}

bool SuiteReport::all_pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<CriterionSummary> SuiteReport::criteria() const {
  std::vector<CriterionSummary> out(kCriterionCount);
  for (int i = 0; i < kCriterionCount; ++i) {
    out[i].number = i + 1;
    out[i].title = kTitles[i];
  }
  for (const Check& c : checks) {
    const int k = criterion_of(c.check_id);
    if (k < 1 || k > kCriterionCount) continue;
    ++out[k - 1].checks;
    if (!c.pass) ++out[k - 1].failed;
  }
  return out;
}

SuiteReport run_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.seed = options.seed;
  Suite(options, report.checks).run();
  std::sort(report.checks.begin(), report.checks.end(),
            [](const Check& a, const Check& b) { return a.check_id < b.check_id; });
  return report;
}

namespace {
nlohmann::ordered_json number(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}
}  // namespace

std::string format_number(double v) { return number(v).dump(); }

std::string to_json(const SuiteReport& report, int indent) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  int passed = 0;
  for (const Check& c : report.checks) {
    nlohmann::ordered_json j;
    j["check_id"] = c.check_id;
    j["description"] = c.description;
    j["paper_anchor"] = c.paper_anchor;
    j["computed"] = number(c.computed);
    j["expected"] = number(c.expected);
    j["tolerance"] = number(c.tolerance);
    j["pass"] = c.pass;
    checks.push_back(std::move(j));
    if (c.pass) ++passed;
  }
  nlohmann::ordered_json doc;
  doc["seed"] = report.seed;
  doc["summary"] = {{"total", report.checks.size()}, {"passed", passed},
                    {"failed", int(report.checks.size()) - passed}, {"all_pass", report.all_pass()}};
  doc["checks"] = std::move(checks);
  return doc.dump(indent, ' ', false);
}

}  // namespace hsres
