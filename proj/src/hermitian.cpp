#include "araki/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace araki {

Matrix SpectralDecomposition::apply_values(const RealVector& v) const {
  if (v.size() != eigenvalues.size())
    throw ShapeMismatch("apply_values: value vector length mismatch");
  return hermitian_part(eigenvectors * v.asDiagonal() * eigenvectors.adjoint());
}

Matrix SpectralDecomposition::prefix_projector(int k) const {
  const int n = dim();
  if (k < 0 || k > n) throw DomainError("prefix_projector: k out of range");
  const auto uk = eigenvectors.leftCols(k);
  return hermitian_part(uk * uk.adjoint());
}

Matrix SpectralDecomposition::eigenprojector(int i, double tie_tol) const {
  const int n = dim();
  if (i < 1 || i > n) throw DomainError("eigenprojector: index out of range");
  const double scale = std::max(std::abs(eigenvalues[0]),
                                std::abs(eigenvalues[n - 1]));
  const double tol = tie_tol * std::max(1.0, scale);
  Matrix p = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    if (std::abs(eigenvalues[j] - eigenvalues[i - 1]) <= tol)
      p += eigenvectors.col(j) * eigenvectors.col(j).adjoint();
  }
  return hermitian_part(p);
}

bool SpectralDecomposition::tied_at(int k, double tie_tol) const {
  const int n = dim();
  if (k < 1 || k > n) throw DomainError("tied_at: k out of range");
  if (k == n) return false;
  const double scale = std::max(std::abs(eigenvalues[0]),
                                std::abs(eigenvalues[n - 1]));
  return std::abs(eigenvalues[k - 1] - eigenvalues[k]) <=
         tie_tol * std::max(1.0, scale);
}

SpectralDecomposition decompose(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw DimensionMismatch("decompose: matrix must be square, dim >= 1");
  const Matrix h = hermitian_part(a);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw NonConvergence("decompose: eigensolver failed");

  // Eigen returns ascending order; reindex to non-increasing with a
  // stable sort so tied eigenvalues keep the solver's order.
  const int n = static_cast<int>(h.rows());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return solver.eigenvalues()[i] > solver.eigenvalues()[j];
  });

  SpectralDecomposition d;
  d.eigenvalues.resize(n);
  d.eigenvectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    d.eigenvalues[i] = solver.eigenvalues()[idx[i]];
    d.eigenvectors.col(i) = solver.eigenvectors().col(idx[i]);
  }
  return d;
}

Definiteness classify_psd(const RealVector& eigenvalues, const TolerancePolicy& pol) {
  const double lam_max = eigenvalues.maxCoeff();
  const double lam_min = eigenvalues.minCoeff();
  const double scale = std::max(lam_max, 0.0);
  if (lam_min > pol.pd_floor * scale && lam_min > 0.0)
    return Definiteness::PositiveDefinite;
  if (lam_min >= -pol.psd_clip * scale) return Definiteness::PositiveSemidefinite;
  return Definiteness::NotPsd;
}

Definiteness classify_psd(const Matrix& a, const TolerancePolicy& pol) {
  return classify_psd(decompose(a).eigenvalues, pol);
}

RealVector clipped_psd_spectrum(const RealVector& eigenvalues,
                                const TolerancePolicy& pol) {
  if (classify_psd(eigenvalues, pol) == Definiteness::NotPsd)
    throw DomainError("clipped_psd_spectrum: matrix is not PSD");
  RealVector out = eigenvalues;
  for (Eigen::Index i = 0; i < out.size(); ++i)
    if (out[i] < 0.0) out[i] = 0.0;
  return out;
}

RealVector spectrum_power(const RealVector& clipped, double s,
                          const TolerancePolicy& pol) {
  if (s < 0.0 &&
      classify_psd(clipped, pol) != Definiteness::PositiveDefinite)
    throw SingularPower("spectrum_power: negative power of a singular matrix");
  RealVector out(clipped.size());
  for (Eigen::Index i = 0; i < clipped.size(); ++i) {
    if (s == 0.0)
      out[i] = 1.0;  // 0^0 := 1, so A^0 = I even on the kernel
    else if (clipped[i] == 0.0)
      out[i] = 0.0;
    else
      out[i] = std::pow(clipped[i], s);
  }
  return out;
}

Matrix apply_function(const SpectralDecomposition& d, const ScalarFunction& f) {
  return d.apply_values(evaluate_on_spectrum(f, d.eigenvalues));
}

Matrix apply_function(const Matrix& a, const ScalarFunction& f) {
  return apply_function(decompose(a), f);
}

Matrix fractional_power(const SpectralDecomposition& d, double s,
                        const TolerancePolicy& pol) {
  return d.apply_values(spectrum_power(clipped_psd_spectrum(d.eigenvalues, pol), s, pol));
}

Matrix fractional_power(const Matrix& a, double s, const TolerancePolicy& pol) {
  return fractional_power(decompose(a), s, pol);
}

Matrix matrix_log(const SpectralDecomposition& d, const TolerancePolicy& pol) {
  if (classify_psd(d.eigenvalues, pol) != Definiteness::PositiveDefinite)
    throw SingularLog("matrix_log: matrix is not PD");
  return d.map([](double x) { return std::log(x); });
}

Matrix matrix_log(const Matrix& a, const TolerancePolicy& pol) {
  return matrix_log(decompose(a), pol);
}

Matrix matrix_exp(const SpectralDecomposition& d) {
  return d.map([](double x) { return std::exp(x); });
}

Matrix matrix_exp(const Matrix& a) { return matrix_exp(decompose(a)); }

Matrix sandwich(const SpectralDecomposition& da, const Matrix& b,
                const TolerancePolicy& pol) {
  if (da.dim() != b.rows() || b.rows() != b.cols())
    throw DimensionMismatch("sandwich: dimension mismatch");
  const Matrix ah = fractional_power(da, 0.5, pol);
  return hermitian_part(ah * b * ah);
}

Matrix sandwich(const Matrix& a, const Matrix& b, const TolerancePolicy& pol) {
  return sandwich(decompose(a), b, pol);
}

}  // namespace araki
