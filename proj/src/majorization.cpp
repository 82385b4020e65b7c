#include "araki/majorization.hpp"

#include <cmath>
#include <limits>

namespace araki {

namespace {

constexpr double kDegeneracyFloorRel = 1e-13;
constexpr double kEigenNoise = 64.0 * std::numeric_limits<double>::epsilon();

}  // namespace

double power_floor(double f, double alpha, double norm) {
  if (alpha == 0.0) return 0.0;
  if (f <= 0.0) return 0.0;
  if (alpha < 1.0) return std::pow(f, alpha);
  return alpha * std::pow(norm, alpha - 1.0) * f;
}

double eigensolve_floor(double norm) { return kEigenNoise * norm; }

const char* to_string(MajVerdict v) {
  switch (v) {
    case MajVerdict::Holds: return "Holds";
    case MajVerdict::ReverseHolds: return "ReverseHolds";
    case MajVerdict::Fails: return "Fails";
    case MajVerdict::Degenerate: return "Degenerate";
  }
  return "?";
}

const char* to_string(DetCheck d) {
  switch (d) {
    case DetCheck::Equal: return "Equal";
    case DetCheck::NotEqual: return "NotEqual";
    case DetCheck::NotApplicable: return "NotApplicable";
  }
  return "?";
}

RealVector product_eigenvalues(const Matrix& a, double expo_a, const Matrix& b,
                               double expo_b, const TolerancePolicy& pol) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionMismatch("product_eigenvalues: dimension mismatch");
  const Matrix bh = fractional_power(b, expo_b / 2.0, pol);
  const Matrix aa = fractional_power(a, expo_a, pol);
  const Matrix m = hermitian_part(bh * aa * bh);
  SpectralDecomposition dm = decompose(m);

  const double scale = std::max(dm.eigenvalues.cwiseAbs().maxCoeff(), 1.0);
  RealVector out = dm.eigenvalues;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] < 0.0) {
      if (out[i] < -(pol.tol_abs + pol.tol_rel * scale))
        throw NonConvergence(
            "product_eigenvalues: congruence produced a negative eigenvalue "
            "beyond tolerance");
      out[i] = 0.0;
    }
  }
  return out;
}

RealVector product_eigenvalues(const Matrix& x, const Matrix& y,
                               const TolerancePolicy& pol) {
  return product_eigenvalues(x, 1.0, y, 1.0, pol);
}

LogMajorizationReport check_log_majorization(const RealVector& lhs,
                                             const RealVector& rhs,
                                             const TolerancePolicy& pol,
                                             double floor_lhs, double floor_rhs) {
  const Eigen::Index n = lhs.size();
  if (rhs.size() != n)
    throw ShapeMismatch("check_log_majorization: length mismatch");
  if (n == 0) throw ShapeMismatch("check_log_majorization: empty input");

  LogMajorizationReport rep;
  rep.prefix_log_lhs.resize(n);
  rep.prefix_log_rhs.resize(n);

  for (Eigen::Index i = 0; i < n; ++i) {
    if (!std::isfinite(lhs[i]) || !std::isfinite(rhs[i])) {
      rep.verdict = MajVerdict::Degenerate;
      return rep;
    }
    if (lhs[i] < 0.0 || rhs[i] < 0.0)
      throw DomainError("check_log_majorization: negative entry");
    if (i > 0 && (lhs[i] > lhs[i - 1] || rhs[i] > rhs[i - 1]))
      throw DomainError("check_log_majorization: entries must be sorted non-increasing");
  }

  const double vmax = std::max(lhs.maxCoeff(), rhs.maxCoeff());
  const double f_lhs = std::max(floor_lhs, eigensolve_floor(lhs.maxCoeff()));
  const double f_rhs = std::max(floor_rhs, eigensolve_floor(rhs.maxCoeff()));
  rep.floor = std::max({kDegeneracyFloorRel * vmax, f_lhs, f_rhs});

  // Joint sub-floor tail: positions where either side falls below the
  // floor contribute log 0 := -inf to both prefixes.
  const double neg_inf = -std::numeric_limits<double>::infinity();
  Eigen::Index m = 0;
  while (m < n && lhs[m] >= rep.floor && rhs[m] >= rep.floor && rep.floor > 0.0) ++m;
  rep.compared_prefixes = static_cast<int>(m);

  double px = 0.0, py = 0.0, noise = 0.0;
  bool weak = true, weak_rev = true;
  double min_margin = std::numeric_limits<double>::infinity();
  double min_rev_margin = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k < m) {
      px += std::log(lhs[k]);
      py += std::log(rhs[k]);
      noise += f_lhs / lhs[k] + f_rhs / rhs[k];
      rep.prefix_log_lhs[k] = px;
      rep.prefix_log_rhs[k] = py;
      const double tol =
          pol.tol_abs + pol.tol_rel * std::max(std::abs(px), std::abs(py)) + noise;
      min_margin = std::min(min_margin, py - px);
      min_rev_margin = std::min(min_rev_margin, px - py);
      if (px > py + tol) weak = false;
      if (py > px + tol) weak_rev = false;
    } else {
      // -inf <= -inf: comparisons in the sub-floor tail are vacuous
      rep.prefix_log_lhs[k] = neg_inf;
      rep.prefix_log_rhs[k] = neg_inf;
    }
  }
  rep.weak_holds = weak;
  rep.weak_reverse_holds = weak_rev;
  rep.min_margin = (min_margin == std::numeric_limits<double>::infinity())
                       ? 0.0
                       : min_margin;
  rep.min_reverse_margin =
      (min_rev_margin == std::numeric_limits<double>::infinity()) ? 0.0
                                                                  : min_rev_margin;

  if (m == n) {
    const double sx = rep.prefix_log_lhs[n - 1];
    const double sy = rep.prefix_log_rhs[n - 1];
    const double tol =
        pol.tol_abs + pol.tol_rel * std::max(std::abs(sx), std::abs(sy)) + noise;
    rep.det = std::abs(sx - sy) <= tol ? DetCheck::Equal : DetCheck::NotEqual;
  } else {
    rep.det = DetCheck::NotApplicable;
  }

  if (rep.weak_holds && rep.det != DetCheck::NotEqual)
    rep.verdict = MajVerdict::Holds;
  else if (rep.weak_reverse_holds && rep.det != DetCheck::NotEqual)
    rep.verdict = MajVerdict::ReverseHolds;
  else
    rep.verdict = MajVerdict::Fails;
  return rep;
}

}  // namespace araki
