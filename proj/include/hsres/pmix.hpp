#pragma once

// Classical states as finite positive mixtures of coherent states, the
// weak-value form of Lambda^2 over such mixtures, and one-sided witnesses
// that flag resolution beyond what any classical probe can reach.

#include <array>
#include <string>
#include <vector>

#include "hsres/fock.hpp"
#include "hsres/hermitian.hpp"

namespace hsres {

/// rho = sum_k w_k |alpha_k><alpha_k| with w_k > 0, sum w_k = 1.
class CoherentMixture {
 public:
  CoherentMixture(std::vector<double> weights, std::vector<Complex> amplitudes);

  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
  std::size_t size() const noexcept { return weights_.size(); }

  /// Sum_k w_k |alpha_k|^2.
  double mean_photons() const;

 private:
  std::vector<double> weights_;
  std::vector<Complex> amplitudes_;
};

/// Two-mode analogue: rho = sum_k w_k |a_k, b_k><a_k, b_k|.
class TwoModeCoherentMixture {
 public:
  using Pair = std::array<Complex, 2>;
  TwoModeCoherentMixture(std::vector<double> weights, std::vector<Pair> amplitudes);

  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<Pair>& amplitudes() const noexcept { return amplitudes_; }
  std::size_t size() const noexcept { return weights_.size(); }

 private:
  std::vector<double> weights_;
  std::vector<Pair> amplitudes_;
};

/// Parsed mixture document; exactly one of the two is set.
struct MixtureDocument {
  std::vector<CoherentMixture> single;  // size 0 or 1
  std::vector<TwoModeCoherentMixture> two_mode;
};

/// Parse {"weights":[...], "amplitudes":[[re,im],...]} (single mode) or
/// amplitudes [[[re,im],[re,im]],...] (two mode). Throws DomainError on a
/// malformed document.
MixtureDocument parse_mixture_json(const std::string& text);
MixtureDocument load_mixture_file(const std::string& path);

FockState to_density(const CoherentMixture& mix, const FockSpace& space);
FockState to_density(const TwoModeCoherentMixture& mix, const FockSpace& first,
                     const FockSpace& second);

/// Cutoff adequate for the largest amplitude of the mixture.
FockSpace space_for_mixture(const CoherentMixture& mix, double target_deficit = 1e-12);

enum class WeakGenerator { x, n };

/// Weak values <beta|G^k|alpha>/<beta|alpha> for G = X or N.
struct WeakValues {
  Complex first;
  Complex second;
};
WeakValues weak_values(WeakGenerator kind, Complex alpha, Complex beta);

/// Lambda^2 evaluated as the double sum over mixture components of
/// w_j w_k |<a_j|a_k>|^2 [G2 - |G1|^2]; no Fock truncation involved.
double lambda_sq_weak(const CoherentMixture& mix, WeakGenerator kind);

/// One-sided verdict: a classical-consistent result does not certify a
/// positive P representation.
enum class Verdict { classical_consistent, nonclassical };

/// Witness margin: lambda_sq must exceed the threshold by more than this.
inline constexpr double kWitnessMargin = 1e-9;

struct WitnessResult {
  Verdict verdict = Verdict::classical_consistent;
  double lambda_sq = 0.0;
  double threshold = 0.0;
  double margin() const noexcept { return lambda_sq - threshold; }
};

/// Nonclassical iff Lambda^2(rho, X) > 1/2.
WitnessResult witness_displacement(const DensityMatrix& rho, const Observable& x);

/// Nonclassical iff Lambda^2(rho, N) > tr(N rho).
WitnessResult witness_number(const DensityMatrix& rho, const Observable& n);

/// Nonclassical iff Lambda^2(rho, Jz) > tr[(N1 + N2) rho].
WitnessResult witness_jz(const DensityMatrix& rho, const Observable& jz,
                         const Observable& total_number);
WitnessResult witness_jz(const DensityMatrix& rho, const FockSpace& first,
                         const FockSpace& second);

const char* to_string(Verdict v);

}  // namespace hsres
