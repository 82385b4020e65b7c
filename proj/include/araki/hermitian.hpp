#pragma once

#include <Eigen/Dense>

#include "araki/errors.hpp"
#include "araki/scalar_function.hpp"
#include "araki/types.hpp"

namespace araki {

// Hermitian part (A + A^dagger)/2 — the construction-time symmetrization
// every matrix passes through before spectral work.
template <typename Derived>
typename Derived::PlainObject hermitian_part(const Eigen::MatrixBase<Derived>& a) {
  return typename Derived::PlainObject(0.5 * (a.derived() + a.derived().adjoint()));
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol = 1e-13) {
  if (a.rows() != a.cols()) return false;
  const double dev = (a.derived() - a.derived().adjoint()).norm();
  return dev <= tol * (1.0 + a.derived().norm());
}

// Tr[XY] as a complex number, computed entrywise without forming the
// product. For Hermitian X, Y the value is real up to rounding; the
// imaginary part is the caller's diagnostic.
template <typename DX, typename DY>
Complex trace_product_complex(const Eigen::MatrixBase<DX>& x,
                              const Eigen::MatrixBase<DY>& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
    throw DimensionMismatch("trace_product: operands must be square of equal dim");
  return x.derived().cwiseProduct(y.derived().transpose()).sum();
}

// Re Tr[XY]
template <typename DX, typename DY>
double trace_product(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  return trace_product_complex(x, y).real();
}

template <typename DX, typename DY, typename DZ>
Complex trace_product3_complex(const Eigen::MatrixBase<DX>& x,
                               const Eigen::MatrixBase<DY>& y,
                               const Eigen::MatrixBase<DZ>& z) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || z.rows() != z.cols() ||
      x.rows() != y.rows() || y.rows() != z.rows())
    throw DimensionMismatch("trace_product3: operands must be square of equal dim");
  const Matrix xy = x.derived() * y.derived();
  return trace_product_complex(xy, z);
}

// Re Tr[XYZ]
template <typename DX, typename DY, typename DZ>
double trace_product3(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                      const Eigen::MatrixBase<DZ>& z) {
  return trace_product3_complex(x, y, z).real();
}

// Eigenvalues in non-increasing order with matching orthonormal
// eigenvector columns. Ties keep the solver's stable order, so prefix
// projectors are deterministic for identical input.
struct SpectralDecomposition {
  RealVector eigenvalues;  // non-increasing
  Matrix eigenvectors;     // unitary; column i pairs with eigenvalues[i]

  int dim() const { return static_cast<int>(eigenvalues.size()); }

  Matrix reconstruct() const { return apply_values(eigenvalues); }

  // U diag(v) U^dagger, re-symmetrized
  Matrix apply_values(const RealVector& v) const;

  template <typename F>
  Matrix map(F&& f) const {
    RealVector v(eigenvalues.size());
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) v[i] = f(eigenvalues[i]);
    return apply_values(v);
  }

  // Projector onto the span of the first k eigenvector columns
  // (the k largest eigenvalues); k in [0, dim].
  Matrix prefix_projector(int k) const;

  // Projector onto the full eigenspace containing eigenvalue i
  // (1-based); columns are grouped by eigenvalue within tie_tol
  // relative to the spectral radius.
  Matrix eigenprojector(int i, double tie_tol = 1e-9) const;

  // True when the k-th and (k+1)-th eigenvalues tie (1-based prefix
  // boundary), making the prefix projector basis-dependent.
  bool tied_at(int k, double tie_tol = 1e-9) const;
};

// Symmetrizes the input, then diagonalizes. Throws NonConvergence when
// the solver fails (e.g. non-finite entries).
SpectralDecomposition decompose(const Matrix& a);

// PD if lambda_min > pd_floor * lambda_max, PSD if lambda_min >=
// -psd_clip * lambda_max, NotPSD otherwise.
Definiteness classify_psd(const RealVector& eigenvalues, const TolerancePolicy& pol);
Definiteness classify_psd(const Matrix& a, const TolerancePolicy& pol);

// Eigenvalues with in-tolerance negatives clipped to zero; throws
// DomainError when a genuinely negative eigenvalue remains.
RealVector clipped_psd_spectrum(const RealVector& eigenvalues,
                                const TolerancePolicy& pol);

// Entrywise power of a clipped PSD spectrum: 0^0 := 1, 0^s := 0 for
// s > 0, and SingularPower for s < 0 on a non-PD spectrum.
RealVector spectrum_power(const RealVector& clipped, double s,
                          const TolerancePolicy& pol);

// U diag(f(lambda_i)) U^dagger. Strict domain check on the raw
// spectrum; DomainError if some eigenvalue lies outside the domain of f.
Matrix apply_function(const SpectralDecomposition& d, const ScalarFunction& f);
Matrix apply_function(const Matrix& a, const ScalarFunction& f);

// A^s for PSD A through the spectral mapping, with the limit
// conventions above. SingularPower if s < 0 and A is not PD.
Matrix fractional_power(const SpectralDecomposition& d, double s,
                        const TolerancePolicy& pol);
Matrix fractional_power(const Matrix& a, double s, const TolerancePolicy& pol);

// log A for PD A; SingularLog otherwise.
Matrix matrix_log(const SpectralDecomposition& d, const TolerancePolicy& pol);
Matrix matrix_log(const Matrix& a, const TolerancePolicy& pol);

// exp A for Hermitian A.
Matrix matrix_exp(const SpectralDecomposition& d);
Matrix matrix_exp(const Matrix& a);

// A^{1/2} B A^{1/2}, re-symmetrized. A must be PSD; errors from the
// classification of A propagate.
Matrix sandwich(const Matrix& a, const Matrix& b, const TolerancePolicy& pol);
Matrix sandwich(const SpectralDecomposition& da, const Matrix& b,
                const TolerancePolicy& pol);

}  // namespace araki
