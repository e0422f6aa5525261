#include "hsres/pmix.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "hsres/error.hpp"
#include "hsres/measures.hpp"

namespace hsres {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void validate_weights(const std::vector<double>& weights, std::size_t amplitudes) {
  if (weights.empty()) throw DomainError("CoherentMixture: at least one component is required");
  if (weights.size() != amplitudes)
    throw DomainError("CoherentMixture: weights and amplitudes differ in length");
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("CoherentMixture: weights must be positive");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12)
    throw DomainError("CoherentMixture: weights must sum to 1");
}

void validate_amplitude(Complex a) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
    throw DomainError("CoherentMixture: amplitudes must be finite");
}

Complex parse_complex(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw DomainError("mixture JSON: an amplitude must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

CoherentMixture::CoherentMixture(std::vector<double> weights, std::vector<Complex> amplitudes)
    : weights_(std::move(weights)), amplitudes_(std::move(amplitudes)) {
  validate_weights(weights_, amplitudes_.size());
  for (Complex a : amplitudes_) validate_amplitude(a);
}

double CoherentMixture::mean_photons() const {
  double n = 0.0;
  for (std::size_t k = 0; k < size(); ++k) n += weights_[k] * std::norm(amplitudes_[k]);
  return n;
}

TwoModeCoherentMixture::TwoModeCoherentMixture(std::vector<double> weights, std::vector<Pair> amplitudes)
    : weights_(std::move(weights)), amplitudes_(std::move(amplitudes)) {
  validate_weights(weights_, amplitudes_.size());
  for (const Pair& p : amplitudes_) {
    validate_amplitude(p[0]);
    validate_amplitude(p[1]);
  }
}

MixtureDocument parse_mixture_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("mixture JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("weights") || !doc.contains("amplitudes"))
    throw DomainError("mixture JSON: expected an object with \"weights\" and \"amplitudes\"");
  const auto& w = doc["weights"];
  const auto& amps = doc["amplitudes"];
  if (!w.is_array() || !amps.is_array() || amps.empty())
    throw DomainError("mixture JSON: \"weights\" and \"amplitudes\" must be non-empty arrays");
  std::vector<double> weights;
  for (const auto& x : w) {
    if (!x.is_number()) throw DomainError("mixture JSON: weights must be numbers");
    weights.push_back(x.get<double>());
  }

  MixtureDocument out;
  const bool two_mode = amps[0].is_array() && !amps[0].empty() && amps[0][0].is_array();
  if (two_mode) {
    std::vector<TwoModeCoherentMixture::Pair> pairs;
    for (const auto& p : amps) {
      if (!p.is_array() || p.size() != 2)
        throw DomainError("mixture JSON: a two-mode amplitude must be [[re,im],[re,im]]");
      pairs.push_back({parse_complex(p[0]), parse_complex(p[1])});
    }
    out.two_mode.emplace_back(std::move(weights), std::move(pairs));
  } else {
    std::vector<Complex> single;
    for (const auto& a : amps) single.push_back(parse_complex(a));
    out.single.emplace_back(std::move(weights), std::move(single));
  }
  return out;
}

MixtureDocument load_mixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open mixture file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_mixture_json(ss.str());
}

FockState to_density(const CoherentMixture& mix, const FockSpace& space) {
  const Index d = space.dim();
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < mix.size(); ++k) {
    const ComplexVector v = coherent_amplitudes(mix.amplitudes()[k], d);
    rho.noalias() += mix.weights()[k] * (v * v.adjoint());
  }
  const double kept = rho.trace().real();
  const double deficit = std::max(0.0, 1.0 - kept);
  if (deficit > kMaxTraceDeficit) {
    std::ostringstream os;
    os << "to_density: truncation deficit " << deficit << " at cutoff " << d << "; use a larger cutoff";
    throw TruncationError(os.str());
  }
  return {DensityMatrix(rho / kept, {}, PsdCheck::by_construction), {deficit, true}};
}

FockState to_density(const TwoModeCoherentMixture& mix, const FockSpace& first,
                     const FockSpace& second) {
  const Index d1 = first.dim();
  const Index d2 = second.dim();
  if (d1 * d2 > Tolerances{}.max_dim) throw DimensionError("to_density: two-mode dimension too large");
  // Columns are sqrt(w_k) |alpha_k> (x) |beta_k>, so rho = V V^dagger in one product.
  const Index k_count = static_cast<Index>(mix.size());
  ComplexMatrix v(d1 * d2, k_count);
  for (Index k = 0; k < k_count; ++k) {
    const ComplexVector v1 = std::sqrt(mix.weights()[k]) * coherent_amplitudes(mix.amplitudes()[k][0], d1);
    const ComplexVector v2 = coherent_amplitudes(mix.amplitudes()[k][1], d2);
    for (Index i = 0; i < d1; ++i) v.col(k).segment(i * d2, d2) = v1[i] * v2;
  }
  ComplexMatrix rho = v * v.adjoint();
  const double kept = rho.trace().real();
  const double deficit = std::max(0.0, 1.0 - kept);
  if (deficit > kMaxTraceDeficit) {
    std::ostringstream os;
    os << "to_density: two-mode truncation deficit " << deficit << "; use larger cutoffs";
    throw TruncationError(os.str());
  }
  rho /= kept;
  return {DensityMatrix(std::move(rho), {}, PsdCheck::by_construction), {deficit, true}};
}

FockSpace space_for_mixture(const CoherentMixture& mix, double target_deficit) {
  Complex largest(0.0, 0.0);
  for (Complex a : mix.amplitudes())
    if (std::abs(a) > std::abs(largest)) largest = a;
  return space_for_coherent(largest, target_deficit);
}

WeakValues weak_values(WeakGenerator kind, Complex alpha, Complex beta) {
  if (kind == WeakGenerator::x) {
    const Complex s = alpha + std::conj(beta);
    return {s / kSqrt2, (s * s + 1.0) / 2.0};
  }
  const Complex z = std::conj(beta) * alpha;
  return {z, z * z + z};
}

double lambda_sq_weak(const CoherentMixture& mix, WeakGenerator kind) {
  const auto& w = mix.weights();
  const auto& a = mix.amplitudes();
  Complex sum(0.0, 0.0);
  for (std::size_t j = 0; j < mix.size(); ++j)
    for (std::size_t k = 0; k < mix.size(); ++k) {
      const double overlap = std::exp(-std::norm(a[j] - a[k]));
      const WeakValues v = weak_values(kind, a[j], a[k]);
      sum += w[j] * w[k] * overlap * (v.second - std::norm(v.first));
    }
  // Imaginary parts cancel pairwise between (j, k) and (k, j).
  return std::max(0.0, sum.real());
}

namespace {
WitnessResult decide(double lam, double threshold) {
  WitnessResult r;
  r.lambda_sq = lam;
  r.threshold = threshold;
  r.verdict = lam > threshold + kWitnessMargin ? Verdict::nonclassical : Verdict::classical_consistent;
  return r;
}
}  // namespace

WitnessResult witness_displacement(const DensityMatrix& rho, const Observable& x) {
  return decide(lambda_sq(rho, x), 0.5);
}

WitnessResult witness_number(const DensityMatrix& rho, const Observable& n) {
  const double mean = trace_of_product(rho.matrix(), n.matrix()).real();
  return decide(lambda_sq(rho, n), mean);
}

WitnessResult witness_jz(const DensityMatrix& rho, const Observable& jz_op,
                         const Observable& total) {
  if (jz_op.dim() != total.dim()) throw DimensionError("witness_jz: operator dimensions differ");
  const double mean = trace_of_product(rho.matrix(), total.matrix()).real();
  return decide(lambda_sq(rho, jz_op), mean);
}

WitnessResult witness_jz(const DensityMatrix& rho, const FockSpace& first, const FockSpace& second) {
  const Index d1 = first.dim();
  const Index d2 = second.dim();
  if (rho.dim() != d1 * d2) throw DimensionError("witness_jz: state does not match the two-mode space");
  // Both operators are diagonal in the product Fock basis; skip building them.
  const ComplexMatrix& m = rho.matrix();
  double lam = 0.0;
  double mean = 0.0;
  RealVector g(m.rows());
  for (Index i = 0; i < d1; ++i)
    for (Index j = 0; j < d2; ++j) {
      g[i * d2 + j] = double(i) - double(j);
      mean += double(i + j) * m(i * d2 + j, i * d2 + j).real();
    }
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r) {
      const double diff = g[r] - g[c];
      const Complex z = m(r, c);
      lam += diff * diff * (z.real() * z.real() + z.imag() * z.imag());
    }
  return decide(std::max(0.0, 0.5 * lam), mean);
}

const char* to_string(Verdict v) {
  return v == Verdict::nonclassical ? "nonclassical" : "classical-consistent";
}

}  // namespace hsres
