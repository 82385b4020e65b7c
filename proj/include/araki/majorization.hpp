#pragma once

#include "araki/hermitian.hpp"
#include "araki/types.hpp"

namespace araki {

enum class MajVerdict { Holds, ReverseHolds, Fails, Degenerate };
enum class DetCheck { Equal, NotEqual, NotApplicable };

const char* to_string(MajVerdict v);
const char* to_string(DetCheck d);

// Weak log-majorization compares Ky Fan prefix sums of log-eigenvalues;
// the full relation adds determinant equality. Entries below the
// degeneracy floor carry no information at double precision, so both
// vectors are floored jointly: positions where either side drops below
// the floor contribute log 0 := -inf to both prefixes, and the
// determinant check becomes NotApplicable.
struct LogMajorizationReport {
  RealVector prefix_log_lhs;  // cumulative sums of log eigenvalues
  RealVector prefix_log_rhs;
  bool weak_holds = false;          // lhs prefix <= rhs prefix at every k
  bool weak_reverse_holds = false;  // rhs prefix <= lhs prefix at every k
  DetCheck det = DetCheck::NotApplicable;
  MajVerdict verdict = MajVerdict::Degenerate;
  int compared_prefixes = 0;  // positions before the sub-floor tail
  double floor = 0.0;

  // Smallest margin (in the log domain) of the claimed direction:
  // min_k (rhs_k - lhs_k) over the compared prefixes. Negative when the
  // weak relation fails somewhere.
  double min_margin = 0.0;
  double min_reverse_margin = 0.0;
};

// Eigenvalues of A^a B^b, computed from the Hermitian congruence
// B^{b/2} A^a B^{b/2}; sorted non-increasing and clipped to >= 0.
// SingularPower propagates when a negative exponent meets a singular
// matrix.
RealVector product_eigenvalues(const Matrix& a, double expo_a, const Matrix& b,
                               double expo_b, const TolerancePolicy& pol);

// Eigenvalues of XY for PSD X, Y, via Y^{1/2} X Y^{1/2}.
RealVector product_eigenvalues(const Matrix& x, const Matrix& y,
                               const TolerancePolicy& pol);

// Both inputs must be nonnegative and sorted non-increasing, of equal
// length. Comparison tolerance per prefix is
//   tol_abs + tol_rel * max|prefix| + noise,
// where noise bounds the absolute log error left on each entry: entry i
// is known to absolute accuracy ~ floor_side, so its log carries
// ~ floor_side / value relative error. floor_lhs / floor_rhs let callers
// pass the resolution floor of the construction route that produced each
// vector (e.g. eps * ||M|| for a congruence, propagated through
// fractional powers); entries below the joint floor form the degenerate
// tail. 0 means "only the generic eigensolver floor".
LogMajorizationReport check_log_majorization(const RealVector& lhs,
                                             const RealVector& rhs,
                                             const TolerancePolicy& pol,
                                             double floor_lhs = 0.0,
                                             double floor_rhs = 0.0);

// Absolute resolution floor of x^alpha given values in [0, norm] known
// to absolute accuracy f: f^alpha for alpha < 1, alpha norm^{alpha-1} f
// for alpha >= 1, 0 for alpha == 0.
double power_floor(double f, double alpha, double norm);

// Resolution floor of a dense eigensolve at the given spectral norm.
double eigensolve_floor(double norm);

}  // namespace araki
