#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "araki/errors.hpp"

namespace araki {

// The toolkit works over the complex field throughout; real inputs
// embed trivially.
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Numerical policy shared by every check: verdict tolerances plus the
// spectral floors used to classify PSD/PD inputs. The floors are
// relative to the largest eigenvalue.
struct TolerancePolicy {
  double tol_abs = 1e-10;
  double tol_rel = 1e-8;
  double psd_clip = 1e-12;
  double pd_floor = 1e-10;

  // Verdict slack for a two-sided comparison at the given magnitudes.
  double slack(double lhs, double rhs) const {
    return tol_abs + tol_rel * std::max(std::abs(lhs), std::abs(rhs));
  }

  void validate() const {
    if (!(tol_abs > 0) || !(tol_rel > 0) || !(psd_clip > 0) || !(pd_floor > 0))
      throw DomainError("TolerancePolicy: all fields must be > 0");
  }

  TolerancePolicy tightened(double factor) const {
    TolerancePolicy p = *this;
    p.tol_abs /= factor;
    p.tol_rel /= factor;
    return p;
  }
};

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, NotPsd };

inline const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "PD";
    case Definiteness::PositiveSemidefinite: return "PSD";
    case Definiteness::NotPsd: return "NotPSD";
  }
  return "?";
}

}  // namespace araki
