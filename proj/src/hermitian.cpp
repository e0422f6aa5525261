#include "hsres/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "hsres/error.hpp"

namespace hsres {

namespace {

void require_square_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionError(os.str());
  }
  if (!m.allFinite()) throw InvariantError(std::string(what) + ": non-finite entry");
}

double hermiticity_defect(const ComplexMatrix& m) {
  double worst = 0.0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i <= j; ++i) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

// In place, so large states are not copied again.
ComplexMatrix symmetrized(ComplexMatrix m) {
  for (Index j = 0; j < m.cols(); ++j) {
    m(j, j) = Complex(m(j, j).real(), 0.0);
    for (Index i = 0; i < j; ++i) {
      const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = h;
      m(j, i) = std::conj(h);
    }
  }
  return m;
}

Spectrum decompose(const ComplexMatrix& h) {
  const Index n = h.rows();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    // Eigen's tridiagonal QR gives up after 30*n sweeps.
    os << "eigendecompose: no convergence within " << 30 * n << " QR iterations (dim " << n << ")";
    throw ConvergenceError(os.str());
  }
  Spectrum s;
  s.values = solver.eigenvalues().reverse();
  s.vectors = solver.eigenvectors().rowwise().reverse();
  return s;
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Observable::Observable(ComplexMatrix m, const Tolerances& tol) {
  require_square_finite(m, "Observable");
  const double defect = hermiticity_defect(m);
  if (defect > tol.hermitian) {
    std::ostringstream os;
    os << "Observable: matrix is not Hermitian (defect " << defect << " > " << tol.hermitian << ")";
    throw InvariantError(os.str());
  }
  m_ = symmetrized(std::move(m));
}

bool Observable::is_diagonal() const {
  for (Index j = 0; j < m_.cols(); ++j)
    for (Index i = 0; i < m_.rows(); ++i)
      if (i != j && m_(i, j) != Complex(0.0, 0.0)) return false;
  return true;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, const Tolerances& tol, PsdCheck check) {
  require_square_finite(m, "DensityMatrix");
  const double defect = hermiticity_defect(m);
  if (defect > tol.hermitian) {
    std::ostringstream os;
    os << "DensityMatrix: matrix is not Hermitian (defect " << defect << ")";
    throw InvariantError(os.str());
  }
  m_ = symmetrized(std::move(m));
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << tr << " differs from 1 by more than " << tol.trace;
    throw InvariantError(os.str());
  }
  if (check == PsdCheck::eigenvalues) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
      throw ConvergenceError("DensityMatrix: eigenvalue check did not converge");
    const double lowest = solver.eigenvalues().minCoeff();
    if (lowest < -tol.psd) {
      std::ostringstream os;
      os << "DensityMatrix: negative eigenvalue " << lowest;
      throw InvariantError(os.str());
    }
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& v, const Tolerances& tol) {
  return DensityMatrix(v * v.adjoint(), tol, PsdCheck::by_construction);
}

double DensityMatrix::purity() const {
  return m_.cwiseAbs2().sum();
}

Spectrum eigendecompose(const Observable& m) { return decompose(m.matrix()); }

Spectrum eigendecompose(const DensityMatrix& rho) { return decompose(rho.matrix()); }

Observable psd_sqrt(const DensityMatrix& rho, const Tolerances& tol) {
  const Spectrum s = eigendecompose(rho);
  const Index d = s.values.size();
  // Eigenvalues at roundoff level would otherwise become ~1e-8 roots.
  const double floor = 16.0 * double(d) * std::numeric_limits<double>::epsilon() * std::max(s.values[0], 0.0);
  RealVector roots(d);
  for (Index i = 0; i < d; ++i) {
    double v = s.values[i];
    if (v < 0.0 && v >= -tol.psd) v = 0.0;
    roots[i] = v <= floor ? 0.0 : std::sqrt(v);
  }
  ComplexMatrix root = s.vectors * roots.cast<Complex>().asDiagonal() * s.vectors.adjoint();
  return Observable(std::move(root), tol);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b, Index max_dim) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw DimensionError("tensor: both factors must be square");
  const Index da = a.rows();
  const Index db = b.rows();
  if (da != 0 && db > max_dim / da) {
    std::ostringstream os;
    os << "tensor: product dimension " << da << "*" << db << " exceeds limit " << max_dim;
    throw DimensionError(os.str());
  }
  ComplexMatrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j) out.block(i * db, j * db, db, db) = a(i, j) * b;
  return out;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw DimensionError("trace_of_product: non-conformable operands");
  // tr(AB) = sum_ij A_ij B_ji
  return a.cwiseProduct(b.transpose()).sum();
}

Complex trace_product(std::span<const std::reference_wrapper<const ComplexMatrix>> ms) {
  if (ms.empty()) throw DimensionError("trace_product: empty product");
  const ComplexMatrix& first = ms.front().get();
  if (ms.size() == 1) {
    if (first.rows() != first.cols()) throw DimensionError("trace_product: non-square factor");
    return first.trace();
  }
  ComplexMatrix acc = first;
  for (std::size_t k = 1; k + 1 < ms.size(); ++k) {
    const ComplexMatrix& m = ms[k].get();
    if (acc.cols() != m.rows()) throw DimensionError("trace_product: non-conformable factors");
    acc = acc * m;
  }
  return trace_of_product(acc, ms.back().get());
}

Complex trace_product(std::initializer_list<std::reference_wrapper<const ComplexMatrix>> ms) {
  return trace_product(std::span<const std::reference_wrapper<const ComplexMatrix>>(ms.begin(), ms.size()));
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw DimensionError("commutator: operands must be square with equal dimension");
  return a * b - b * a;
}

ComplexMatrix commutator(const Observable& a, const Observable& b) {
  return commutator(a.matrix(), b.matrix());
}

ComplexMatrix expm(const ComplexMatrix& a, double tolerance) {
  if (a.rows() != a.cols()) throw DimensionError("expm: matrix must be square");
  const Index n = a.rows();
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix scaled = a / std::ldexp(1.0, squarings);

  // Each squaring roughly doubles the relative error of the scaled series.
  const double series_tol = std::max(std::ldexp(tolerance, -squarings), 1e-17);
  ComplexMatrix sum = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k < 64; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
    if (max_abs(term) <= series_tol * max_abs(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace hsres
