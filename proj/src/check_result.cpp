#include "araki/check_result.hpp"

#include <array>
#include <utility>

namespace araki {

namespace {

constexpr std::array<std::pair<InequalityId, std::string_view>, 20> kIdNames{{
    {InequalityId::Gt, "gt"},
    {InequalityId::Alt, "alt"},
    {InequalityId::LieTrotter, "lie_trotter"},
    {InequalityId::Ah94, "ah94"},
    {InequalityId::Blp, "blp"},
    {InequalityId::BlpTrace, "blp_trace"},
    {InequalityId::Gblp, "gblp"},
    {InequalityId::Hp93, "hp93"},
    {InequalityId::Ma12, "ma12"},
    {InequalityId::MainDirect, "main_direct"},
    {InequalityId::MainConverse, "main_converse"},
    {InequalityId::Projector, "projector"},
    {InequalityId::Pinch, "pinch"},
    {InequalityId::JensenStep, "jensen_step"},
    {InequalityId::Lemma2, "lemma2"},
    {InequalityId::GtLimit, "gt_limit"},
    {InequalityId::S2, "s2"},
    {InequalityId::Lemma4, "lemma4"},
    {InequalityId::Conj1, "conj1"},
    {InequalityId::Conj2, "conj2"},
}};

}  // namespace

std::string_view to_string(InequalityId id) {
  for (const auto& [k, v] : kIdNames)
    if (k == id) return v;
  return "?";
}

std::optional<InequalityId> parse_inequality_id(std::string_view s) {
  for (const auto& [k, v] : kIdNames)
    if (v == s) return k;
  return std::nullopt;
}

bool is_conjecture(InequalityId id) {
  return id == InequalityId::Conj1 || id == InequalityId::Conj2;
}

bool is_log_majorization_id(InequalityId id) {
  switch (id) {
    case InequalityId::LieTrotter:
    case InequalityId::Ah94:
    case InequalityId::Blp:
    case InequalityId::Gblp:
    case InequalityId::Ma12:
      return true;
    default:
      return false;
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Violated: return "Violated";
    case Verdict::Degenerate: return "Degenerate";
  }
  return "?";
}

CheckResult make_check_result(std::string id, ExponentParams params, double lhs,
                              double rhs, const TolerancePolicy& pol,
                              std::map<std::string, double> diagnostics,
                              double noise) {
  CheckResult r;
  r.inequality_id = std::move(id);
  r.params = params;
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = rhs - lhs;
  r.rel_gap = r.gap / std::max({1.0, std::abs(lhs), std::abs(rhs)});
  const double slack = pol.slack(lhs, rhs) + noise;
  r.verdict = r.gap >= -slack ? Verdict::Holds : Verdict::Violated;
  r.diagnostics = std::move(diagnostics);
  r.diagnostics["slack"] = slack;
  return r;
}

CheckResult make_degenerate_result(std::string id, ExponentParams params,
                                   std::string note,
                                   std::map<std::string, double> diagnostics) {
  CheckResult r;
  r.inequality_id = std::move(id);
  r.params = params;
  r.verdict = Verdict::Degenerate;
  r.note = std::move(note);
  r.diagnostics = std::move(diagnostics);
  return r;
}

}  // namespace araki
