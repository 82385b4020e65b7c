#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "araki/types.hpp"

namespace araki {

// Stable inequality identifiers, used in reports and on the CLI.
enum class InequalityId {
  Gt,
  Alt,
  LieTrotter,
  Ah94,
  Blp,
  BlpTrace,
  Gblp,
  Hp93,
  Ma12,
  MainDirect,
  MainConverse,
  Projector,
  Pinch,
  JensenStep,
  Lemma2,
  GtLimit,
  S2,
  Lemma4,
  Conj1,
  Conj2,
};

std::string_view to_string(InequalityId id);
std::optional<InequalityId> parse_inequality_id(std::string_view s);

// Conjectured statements report violations as findings, never as suite
// failures.
bool is_conjecture(InequalityId id);

// Ids whose claim is a log-majorization relation rather than a single
// trace comparison.
bool is_log_majorization_id(InequalityId id);

// The exponent tuple an inequality reads; each predicate validates the
// subset it needs.
struct ExponentParams {
  std::optional<double> s, t, r, p, q, alpha;
};

enum class Verdict { Holds, Violated, Degenerate };

const char* to_string(Verdict v);

// The universal record of one inequality instance. Gaps are oriented so
// that "claim true" means gap >= 0; lhs is the side claimed small, rhs
// the side claimed large.
struct CheckResult {
  std::string inequality_id;
  ExponentParams params;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;      // rhs - lhs
  double rel_gap = 0.0;  // gap / max(1, |lhs|, |rhs|)
  Verdict verdict = Verdict::Degenerate;
  std::map<std::string, double> diagnostics;
  std::string note;
};

// Builds a CheckResult with the uniform verdict rule:
// Holds iff gap >= -(tol_abs + tol_rel * max(|lhs|, |rhs|) + noise),
// where noise is the caller's bound on the rounding error of the two
// trace evaluations (an operand-norm product scale; 0 when the operands
// are O(1)-conditioned). The effective slack lands in
// diagnostics["slack"].
CheckResult make_check_result(std::string id, ExponentParams params, double lhs,
                              double rhs, const TolerancePolicy& pol,
                              std::map<std::string, double> diagnostics = {},
                              double noise = 0.0);

CheckResult make_degenerate_result(std::string id, ExponentParams params,
                                   std::string note,
                                   std::map<std::string, double> diagnostics = {});

}  // namespace araki
