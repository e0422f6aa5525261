#pragma once

// Dense complex Hermitian matrix algebra: validated operator types,
// eigendecomposition, PSD square roots, Kronecker products and trace
// polynomials.

#include <complex>
#include <functional>
#include <initializer_list>
#include <span>

#include <Eigen/Dense>

namespace hsres {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Validation thresholds. Truncated Fock states occasionally need these
/// loosened, so they are passed at construction rather than hard-coded.
struct Tolerances {
  double hermitian = 1e-10;  ///< max |M[j,k] - conj(M[k,j])|
  double trace = 1e-10;      ///< |tr(rho) - 1|
  double psd = 1e-10;        ///< smallest admissible eigenvalue is -psd
  Index max_dim = 4096;      ///< guard for tensor products
};

/// Hermitian operator. The stored matrix is exactly Hermitian: inputs within
/// `Tolerances::hermitian` of Hermitian are symmetrized as (M + M^dagger)/2.
class Observable {
 public:
  explicit Observable(ComplexMatrix m, const Tolerances& tol = {});

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

  /// True when every off-diagonal entry is exactly zero.
  bool is_diagonal() const;

 private:
  ComplexMatrix m_;
};

/// How a DensityMatrix establishes positivity.
enum class PsdCheck {
  eigenvalues,      ///< compute the smallest eigenvalue and compare to -psd
  by_construction,  ///< caller guarantees PSD (mixtures, unitary conjugates)
};

/// Unit-trace Hermitian positive semidefinite matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m, const Tolerances& tol = {},
                         PsdCheck check = PsdCheck::eigenvalues);

  /// Pure state |v><v| for a normalized v.
  static DensityMatrix pure(const ComplexVector& v, const Tolerances& tol = {});

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

  /// The same matrix viewed as a generic Hermitian operator.
  Observable as_observable() const { return Observable(m_); }

  /// tr(rho^2).
  double purity() const;

 private:
  ComplexMatrix m_;
};

/// Eigenvalues in descending order with matching orthonormal eigenvector
/// columns.
struct Spectrum {
  RealVector values;
  ComplexMatrix vectors;
};

/// Hermitian eigendecomposition. Throws ConvergenceError if the solver
/// fails to converge.
Spectrum eigendecompose(const Observable& m);
Spectrum eigendecompose(const DensityMatrix& rho);

/// Principal square root of a PSD matrix; eigenvalues in [-psd, 0) are
/// clamped to zero first, and eigenvalues within 16*d*eps of the largest are
/// treated as zero.
Observable psd_sqrt(const DensityMatrix& rho, const Tolerances& tol = {});

/// Kronecker product a (x) b with row index i_a * dim(b) + i_b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     Index max_dim = Tolerances{}.max_dim);

/// tr(m_1 m_2 ... m_k). Only the running left product is materialized; the
/// last factor is contracted directly into the trace.
Complex trace_product(std::span<const std::reference_wrapper<const ComplexMatrix>> ms);
Complex trace_product(std::initializer_list<std::reference_wrapper<const ComplexMatrix>> ms);

/// tr(a b) in O(dim^2).
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// ab - ba.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const Observable& a, const Observable& b);

/// Largest |m_ij|.
double max_abs(const ComplexMatrix& m);

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
/// The series stops once a term falls below `tolerance` relative to the
/// partial sum.
ComplexMatrix expm(const ComplexMatrix& a, double tolerance = 1e-12);

}  // namespace hsres
