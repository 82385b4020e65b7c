#include "araki/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "araki/report.hpp"

namespace araki {

namespace {

void require_cfg(bool ok, const char* msg) {
  if (!ok) throw DomainError(msg);
}

void validate_config(const SearchConfig& cfg) {
  require_cfg(cfg.budget >= 1, "search config: budget must be >= 1");
  require_cfg(!cfg.dims.empty(), "search config: dims must be non-empty");
  for (int d : cfg.dims) require_cfg(d >= 1, "search config: dims must be >= 1");
  require_cfg(cfg.step_init > 0.0, "search config: step_init must be > 0");
  require_cfg(cfg.refine_steps >= 0, "search config: refine_steps must be >= 0");
  require_cfg(cfg.keep_best >= 1, "search config: keep_best must be >= 1");
  require_cfg(cfg.scale > 0.0, "search config: scale must be > 0");
}

// Exponent names each target expands over; grid keys outside the set
// (e.g. "t" for lemma2) are consumed by the target's own inner loops.
std::vector<std::string> grid_keys(InequalityId id) {
  switch (id) {
    case InequalityId::MainDirect:
    case InequalityId::MainConverse:
    case InequalityId::Projector:
    case InequalityId::Pinch:
    case InequalityId::JensenStep:
    case InequalityId::Lemma2:
    case InequalityId::GtLimit:
    case InequalityId::Conj1:
    case InequalityId::Ma12:
      return {"s"};
    case InequalityId::S2:
    case InequalityId::Lemma4:
    case InequalityId::Gt:
      return {};
    case InequalityId::Alt:
      return {"r"};
    case InequalityId::LieTrotter:
    case InequalityId::Hp93:
      return {"p"};
    case InequalityId::Ah94:
      return {"p", "alpha"};
    case InequalityId::Blp:
    case InequalityId::BlpTrace:
      return {"s", "t"};
    case InequalityId::Gblp:
    case InequalityId::Conj2:
      return {"p", "q", "r"};
  }
  return {};
}

void set_param(ExponentParams& p, const std::string& key, double v) {
  if (key == "s") p.s = v;
  else if (key == "t") p.t = v;
  else if (key == "r") p.r = v;
  else if (key == "p") p.p = v;
  else if (key == "q") p.q = v;
  else if (key == "alpha") p.alpha = v;
  else throw DomainError("unknown grid parameter: " + key);
}

std::vector<ExponentParams> expand_grid(const ParamGrid& grid, InequalityId id) {
  std::vector<ExponentParams> points{ExponentParams{}};
  for (const std::string& key : grid_keys(id)) {
    const auto it = grid.find(key);
    if (it == grid.end() || it->second.empty()) continue;
    std::vector<ExponentParams> next;
    next.reserve(points.size() * it->second.size());
    for (const ExponentParams& base : points)
      for (const double v : it->second) {
        ExponentParams p = base;
        set_param(p, key, v);
        next.push_back(p);
      }
    points = std::move(next);
  }
  return points;
}

std::vector<double> grid_values(const ParamGrid& grid, const std::string& key,
                                std::vector<double> fallback) {
  const auto it = grid.find(key);
  if (it == grid.end() || it->second.empty()) return fallback;
  return it->second;
}

bool needs_hermitian_inputs(InequalityId id) {
  return id == InequalityId::Gt || id == InequalityId::LieTrotter ||
         id == InequalityId::Ah94;
}

// Traceless rescaled Hermitian input for the exponential-family
// inequalities; keeps exp() dynamic range resolvable in doubles.
Matrix recentered_hermitian(const Matrix& m, double target_norm = 1.5) {
  Matrix h = hermitian_part(m);
  const auto n = h.rows();
  h -= (h.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
  const double norm = h.norm();
  if (norm > 0.0) h *= target_norm / norm;
  return h;
}

const char* classify_error(const Error& e) {
  if (dynamic_cast<const HypothesisViolated*>(&e)) return "HypothesisViolated";
  if (dynamic_cast<const SingularPower*>(&e)) return "SingularPower";
  if (dynamic_cast<const SingularLog*>(&e)) return "SingularLog";
  if (dynamic_cast<const NonConvergence*>(&e)) return "NonConvergence";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const ShapeMismatch*>(&e)) return "ShapeMismatch";
  return "Error";
}

// --- recordable weight families -------------------------------------------

struct WeightChoice {
  ScalarFunction fn;
  std::map<std::string, double> descriptor;
};

WeightChoice power_weight(double t) {
  return {ScalarFunction::power(t), {{"f_kind", 0.0}, {"f_exponent", t}}};
}

// Five fixed members plus three random nonnegative step functions with
// thresholds inside the spectrum range; descriptors make every member
// reconstructible from the record.
std::vector<WeightChoice> direct_weight_family(double lam_lo, double lam_hi,
                                               Rng& aux) {
  std::vector<WeightChoice> fs;
  fs.push_back(power_weight(0.0));
  fs.push_back(power_weight(0.5));
  fs.push_back(power_weight(1.0));
  fs.push_back(power_weight(2.0));
  fs.push_back({ScalarFunction::exponential(), {{"f_kind", 1.0}}});
  for (int j = 0; j < 3; ++j) {
    const int terms = 1 + static_cast<int>(aux.uniform_int(3));
    std::vector<ScalarFunction::StepTerm> steps;
    std::map<std::string, double> desc{{"f_kind", 2.0}, {"f_steps", double(terms)}};
    for (int i = 0; i < terms; ++i) {
      ScalarFunction::StepTerm st;
      st.threshold = aux.uniform(lam_lo, lam_hi + 1e-9);
      st.weight = aux.uniform(0.1, 2.0);
      desc["f_step_t" + std::to_string(i)] = st.threshold;
      desc["f_step_w" + std::to_string(i)] = st.weight;
      steps.push_back(st);
    }
    fs.push_back({ScalarFunction::step_combination(std::move(steps)), std::move(desc)});
  }
  return fs;
}

ScalarFunction rebuild_weight(const std::map<std::string, double>& desc) {
  const auto it = desc.find("f_kind");
  if (it == desc.end()) throw DomainError("record carries no weight descriptor");
  const int kind = static_cast<int>(it->second);
  if (kind == 0) return ScalarFunction::power(desc.at("f_exponent"));
  if (kind == 1) return ScalarFunction::exponential();
  if (kind == 2) {
    const int terms = static_cast<int>(desc.at("f_steps"));
    std::vector<ScalarFunction::StepTerm> steps;
    for (int i = 0; i < terms; ++i)
      steps.push_back({desc.at("f_step_t" + std::to_string(i)),
                       desc.at("f_step_w" + std::to_string(i))});
    return ScalarFunction::step_combination(std::move(steps));
  }
  throw DomainError("record carries an unknown weight descriptor");
}

// Power weights g = x^{-s-delta} and a tabulated x^{-s} h(x) with h a
// random nonincreasing step over the distinct spectrum points.
std::vector<WeightChoice> converse_weight_family(const RealVector& lam_clipped,
                                                 double s, Rng& aux) {
  std::vector<WeightChoice> gs;
  for (const double delta : {0.0, 0.5, 1.0})
    gs.push_back({ScalarFunction::power(-s - delta),
                  {{"g_kind", 0.0}, {"g_exponent", -s - delta}}});

  if (lam_clipped.minCoeff() > 0.0) {
    std::vector<double> distinct;
    for (Eigen::Index i = 0; i < lam_clipped.size(); ++i) {
      if (distinct.empty() ||
          std::abs(distinct.back() - lam_clipped[i]) >
              1e-12 * std::max(1.0, std::abs(distinct.back())))
        distinct.push_back(lam_clipped[i]);
    }
    // h grows as x shrinks down the sorted spectrum
    double h = aux.uniform(0.1, 1.0);
    std::vector<ScalarFunction::TablePoint> points;
    for (const double x : distinct) {
      points.push_back({x, std::pow(x, -s) * h});
      h += aux.uniform(0.0, 1.0);
    }
    gs.push_back({ScalarFunction::tabulated(std::move(points)), {{"g_kind", 3.0}}});
  }
  return gs;
}

// --- per-instance evaluation -----------------------------------------------

CheckResult lm_to_check(InequalityId id, const LogMajorizationReport& rep,
                        const ExponentParams& p, bool expect_reverse) {
  CheckResult r;
  r.inequality_id = std::string(to_string(id));
  r.params = p;
  const double margin = expect_reverse ? rep.min_reverse_margin : rep.min_margin;
  r.lhs = 0.0;
  r.rhs = margin;
  r.gap = margin;
  r.rel_gap = margin / std::max(1.0, std::abs(margin));
  const bool weak = expect_reverse ? rep.weak_reverse_holds : rep.weak_holds;
  if (rep.verdict == MajVerdict::Degenerate)
    r.verdict = Verdict::Degenerate;
  else
    r.verdict = (weak && rep.det != DetCheck::NotEqual) ? Verdict::Holds
                                                        : Verdict::Violated;
  r.diagnostics["log_majorization"] = 1.0;
  r.diagnostics["det"] = static_cast<double>(rep.det);
  r.diagnostics["weak_holds"] = rep.weak_holds ? 1.0 : 0.0;
  r.diagnostics["weak_reverse_holds"] = rep.weak_reverse_holds ? 1.0 : 0.0;
  r.diagnostics["compared_prefixes"] = rep.compared_prefixes;
  r.diagnostics["expected_reverse"] = expect_reverse ? 1.0 : 0.0;
  return r;
}

class InstanceEvaluator {
 public:
  InstanceEvaluator(InequalityId target, const SearchConfig& cfg,
                    std::uint64_t ordinal, const TolerancePolicy& pol)
      : target_(target),
        cfg_(cfg),
        ordinal_(ordinal),
        pol_(pol),
        aux_(derive_seed(derive_seed(cfg.seed, ordinal), 2)) {
    mats_ = instance_matrices(target, cfg, ordinal, &dim_, &family_);
  }

  std::vector<SearchRecord> run() {
    const ParamGrid grid = cfg_.grid.empty() ? default_grid(target_) : cfg_.grid;
    for (const ExponentParams& p : expand_grid(grid, target_)) dispatch(grid, p);
    return std::move(records_);
  }

 private:
  const Matrix& a() const { return mats_.first; }
  const Matrix& b() const { return mats_.second; }

  void push(CheckResult&& cr, std::map<std::string, double> extra = {}) {
    SearchRecord r;
    r.target = cr.inequality_id;
    r.params = cr.params;
    r.dim = dim_;
    r.family = std::string(to_string(family_));
    r.master_seed = cfg_.seed;
    r.ordinal = ordinal_;
    r.check_index = records_.size();
    r.lhs = cr.lhs;
    r.rhs = cr.rhs;
    r.gap = cr.gap;
    r.rel_gap = cr.rel_gap;
    r.verdict = to_string(cr.verdict);
    r.diagnostics = std::move(cr.diagnostics);
    for (auto& [k, v] : extra) r.diagnostics[k] = v;
    r.note = std::move(cr.note);
    records_.push_back(std::move(r));
  }

  template <typename Fn>
  void checked(const ExponentParams& p, std::map<std::string, double> extra, Fn&& fn) {
    try {
      push(fn(), std::move(extra));
    } catch (const Error& e) {
      CheckResult cr = make_degenerate_result(
          std::string(to_string(target_)), p,
          std::string(classify_error(e)) + ": " + e.what());
      push(std::move(cr), std::move(extra));
    }
  }

  double require(const std::optional<double>& v, const char* key) const {
    if (!v.has_value())
      throw DomainError(std::string("target ") + std::string(to_string(target_)) +
                        " needs grid parameter " + key);
    return *v;
  }

  // spectrum bounds of A, for threshold placement and k loops
  RealVector lam_a() {
    if (!lam_a_.has_value()) {
      SpectralDecomposition d = decompose(a());
      RealVector lam = d.eigenvalues;
      for (Eigen::Index i = 0; i < lam.size(); ++i) lam[i] = std::max(lam[i], 0.0);
      lam_a_ = lam;
    }
    return *lam_a_;
  }

  void dispatch(const ParamGrid& grid, const ExponentParams& p) {
    switch (target_) {
      case InequalityId::MainDirect: {
        const double s = require(p.s, "s");
        const RealVector lam = lam_a();
        for (auto& w : direct_weight_family(lam.minCoeff(), lam.maxCoeff(), aux_))
          checked(p, w.descriptor,
                  [&] { return gap_main_direct(w.fn, a(), b(), s, pol_); });
        return;
      }
      case InequalityId::MainConverse: {
        const double s = require(p.s, "s");
        const RealVector lam = lam_a();
        for (auto& w : converse_weight_family(lam, s, aux_))
          checked(p, w.descriptor,
                  [&] { return gap_main_converse(w.fn, a(), b(), s, pol_); });
        return;
      }
      case InequalityId::Projector: {
        const double s = require(p.s, "s");
        for (int k = 1; k <= dim_; ++k)
          checked(p, {}, [&] { return gap_projector(a(), b(), k, s, pol_); });
        return;
      }
      case InequalityId::Pinch: {
        const double s = require(p.s, "s");
        for (int k = 1; k <= dim_; ++k)
          checked(p, {}, [&] { return gap_pinch_lemma(a(), b(), k, s, pol_); });
        return;
      }
      case InequalityId::JensenStep: {
        const double s = require(p.s, "s");
        for (int k = 1; k <= dim_; ++k)
          checked(p, {}, [&] { return operator_jensen_step(a(), b(), k, s, pol_); });
        return;
      }
      case InequalityId::Lemma2: {
        const double s = require(p.s, "s");
        std::vector<double> ts = grid_values(grid, "t", {-1.0, -2.0});
        ts.insert(ts.begin(), -s);
        std::vector<double> seen;
        for (const double t : ts) {
          if (t > -s) continue;  // outside the stated range
          bool dup = false;
          for (const double u : seen) dup = dup || u == t;
          if (dup) continue;
          seen.push_back(t);
          ExponentParams pt = p;
          pt.t = t;
          checked(pt, {}, [&] { return gap_lemma2(a(), b(), s, t, pol_); });
        }
        return;
      }
      case InequalityId::GtLimit: {
        const double s = require(p.s, "s");
        const std::vector<double> ts =
            grid_values(grid, "t", {-1.0, -5.0, -20.0, -50.0});
        const RealVector lam = lam_a();
        for (int k = 1; k <= dim_; ++k) {
          const double lk = lam[k - 1];
          if (!(lk > 0.0)) continue;  // epsilon in (0, lambda_k) infeasible
          for (const double t : ts) {
            if (!(t <= -s || t == 0.0)) continue;
            ExponentParams pt = p;
            pt.t = t;
            checked(pt, {}, [&] {
              return gap_gt_limit(a(), b(), k, s, t, lk / 2.0, pol_);
            });
          }
        }
        return;
      }
      case InequalityId::S2: {
        const RealVector lam = lam_a();
        for (auto& w : direct_weight_family(lam.minCoeff(), lam.maxCoeff(), aux_))
          checked(p, w.descriptor, [&] { return gap_s2(w.fn, a(), b(), pol_); });
        return;
      }
      case InequalityId::Lemma4: {
        for (int k = 1; k <= dim_; ++k)
          checked(p, {}, [&] { return gap_lemma4(a(), b(), k, pol_); });
        return;
      }
      case InequalityId::Conj1: {
        const double s = require(p.s, "s");
        const RealVector lam = lam_a();
        for (auto& w : direct_weight_family(lam.minCoeff(), lam.maxCoeff(), aux_))
          checked(p, w.descriptor,
                  [&] { return gap_conjecture1(w.fn, a(), b(), s, pol_); });
        return;
      }
      case InequalityId::Conj2: {
        const double pp = require(p.p, "p");
        const double q = require(p.q, "q");
        const double r = require(p.r, "r");
        if (!(pp > 0.0 && pp <= q && r >= 0.0)) return;  // outside the conjecture
        checked(p, {}, [&] { return gap_conjecture2(a(), b(), pp, q, r, pol_); });
        return;
      }
      case InequalityId::Gt:
      case InequalityId::Alt:
      case InequalityId::Hp93:
      case InequalityId::BlpTrace:
        checked(p, {}, [&] { return gap_classical(target_, a(), b(), p, pol_); });
        return;
      case InequalityId::LieTrotter:
      case InequalityId::Ah94:
      case InequalityId::Blp:
        checked(p, {}, [&] {
          return lm_to_check(target_, lm_classical(target_, a(), b(), p, pol_), p,
                             /*expect_reverse=*/false);
        });
        return;
      case InequalityId::Gblp: {
        const double pp = require(p.p, "p");
        const double q = require(p.q, "q");
        const double r = require(p.r, "r");
        if (!gblp_in_region(pp, q, r) || !(pp > 0.0)) return;  // skip invalid combos
        checked(p, {}, [&] {
          return lm_to_check(target_, lm_classical(target_, a(), b(), p, pol_), p,
                             /*expect_reverse=*/false);
        });
        return;
      }
      case InequalityId::Ma12: {
        const double s = require(p.s, "s");
        const bool expect_reverse = s > 1.0 && s < 2.0;
        checked(p, {}, [&] {
          return lm_to_check(target_, lm_classical(target_, a(), b(), p, pol_), p,
                             expect_reverse);
        });
        return;
      }
    }
    throw DomainError("evaluate_instance: unsupported target");
  }

  InequalityId target_;
  const SearchConfig& cfg_;
  std::uint64_t ordinal_;
  TolerancePolicy pol_;
  Rng aux_;
  std::pair<Matrix, Matrix> mats_;
  int dim_ = 0;
  SampleFamily family_ = SampleFamily::Wishart;
  std::optional<RealVector> lam_a_;
  std::vector<SearchRecord> records_;
};

CheckResult evaluate_conjecture_point(InequalityId target, const Matrix& a,
                                      const Matrix& b, const ExponentParams& p,
                                      const std::map<std::string, double>& descriptor,
                                      const TolerancePolicy& pol) {
  if (target == InequalityId::Conj2) {
    if (!p.p || !p.q || !p.r) throw DomainError("conj2 record lacks (p, q, r)");
    return gap_conjecture2(a, b, *p.p, *p.q, *p.r, pol);
  }
  if (target == InequalityId::Conj1) {
    if (!p.s) throw DomainError("conj1 record lacks s");
    return gap_conjecture1(rebuild_weight(descriptor), a, b, *p.s, pol);
  }
  throw DomainError("only conjecture records can be re-evaluated from payload");
}

bool record_less(const SearchRecord& x, const SearchRecord& y) {
  if (x.gap != y.gap) return x.gap < y.gap;
  if (x.ordinal != y.ordinal) return x.ordinal < y.ordinal;
  return x.check_index < y.check_index;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

nlohmann::ordered_json config_to_json(const SearchConfig& cfg) {
  nlohmann::ordered_json j;
  j["target"] = std::string(to_string(cfg.target));
  j["dims"] = cfg.dims;
  j["budget"] = cfg.budget;
  j["seed"] = cfg.seed;
  j["refine_steps"] = cfg.refine_steps;
  j["step_init"] = cfg.step_init;
  j["refine_top"] = cfg.refine_top;
  j["keep_best"] = cfg.keep_best;
  j["scale"] = cfg.scale;
  nlohmann::ordered_json fams = nlohmann::ordered_json::array();
  for (const auto f : cfg.families) fams.push_back(std::string(to_string(f)));
  j["families"] = std::move(fams);
  nlohmann::ordered_json grid = nlohmann::ordered_json::object();
  for (const auto& [k, v] : cfg.grid) grid[k] = v;
  j["grid"] = std::move(grid);
  return j;
}

nlohmann::ordered_json counts_to_json(const SweepCounts& c) {
  nlohmann::ordered_json j;
  j["checks"] = c.checks;
  j["holds"] = c.holds;
  j["violated"] = c.violated;
  j["degenerate"] = c.degenerate;
  j["near_violations"] = c.near_violations;
  j["violation_findings"] = c.violation_findings;
  nlohmann::ordered_json reasons = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.degenerate_reasons) reasons[k] = v;
  j["degenerate_reasons"] = std::move(reasons);
  return j;
}

SweepCounts counts_from_json(const nlohmann::json& j) {
  SweepCounts c;
  c.checks = j.at("checks").get<std::uint64_t>();
  c.holds = j.at("holds").get<std::uint64_t>();
  c.violated = j.at("violated").get<std::uint64_t>();
  c.degenerate = j.at("degenerate").get<std::uint64_t>();
  c.near_violations = j.at("near_violations").get<std::uint64_t>();
  c.violation_findings = j.at("violation_findings").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("degenerate_reasons").items())
    c.degenerate_reasons[k] = v.get<std::uint64_t>();
  return c;
}

}  // namespace

ParamGrid default_grid(InequalityId id) {
  switch (id) {
    case InequalityId::MainDirect:
    case InequalityId::MainConverse:
    case InequalityId::Projector:
      return {{"s", {0.0, 0.25, 0.5, 0.75, 1.0}}};
    case InequalityId::Pinch:
      return {{"s", {0.0, 0.3, 0.7, 1.0, 1.3, 1.7, 2.0}}};
    case InequalityId::JensenStep:
      return {{"s", {0.0, 0.3, 0.7, 1.0}}};
    case InequalityId::Lemma2:
      return {{"s", {0.25, 0.5, 0.75, 1.0}}, {"t", {-1.0, -2.0}}};
    case InequalityId::GtLimit:
      return {{"s", {0.25, 0.5, 1.0}}, {"t", {-1.0, -5.0, -20.0, -50.0}}};
    case InequalityId::S2:
    case InequalityId::Lemma4:
    case InequalityId::Gt:
      return {};
    case InequalityId::Conj1:
      return {{"s", {1.25, 1.5, 2.0, 2.5, 3.0, 4.0}}};
    case InequalityId::Conj2:
      return {{"p", {0.5, 1.0, 2.0}}, {"q", {0.5, 1.0, 2.0}}, {"r", {0.0, 0.5, 1.0}}};
    case InequalityId::Alt:
      return {{"r", {0.3, 0.5, 1.0, 2.0, 3.0}}};
    case InequalityId::LieTrotter:
      return {{"p", {0.5, 1.0, 2.0}}};
    case InequalityId::Ah94:
      return {{"p", {0.5, 1.0}}, {"alpha", {0.3, 0.7}}};
    case InequalityId::Blp:
      return {{"s", {0.25, 0.5, 0.75, 1.0}}, {"t", {0.5, 1.0, 2.0}}};
    case InequalityId::BlpTrace:
      return {{"s", {0.0, 0.25, 0.5, 0.75, 1.0}}, {"t", {0.0, 0.5, 1.0, 2.0}}};
    case InequalityId::Gblp:
      return {{"p", {0.5, 1.0, 2.0}},
              {"q", {0.5, 1.0, 2.0}},
              {"r", {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0}}};
    case InequalityId::Ma12:
      return {{"s", {0.25, 0.5, 1.2, 1.8, 2.5}}};
    case InequalityId::Hp93:
      return {{"p", {0.5, 1.0, 2.0}}};
  }
  return {};
}

std::vector<SampleFamily> default_families() {
  return {SampleFamily::Wishart,        SampleFamily::NearSingular,
          SampleFamily::SpikedDiagonal, SampleFamily::DegenerateSpectrum,
          SampleFamily::CommutingPair,  SampleFamily::Density};
}

bool gblp_in_region(double p, double q, double r) {
  const bool forward = q > 0.0 && q <= p && r >= 0.0;
  const bool reverse1 = p > 0.0 && r >= 0.0 && r <= p && p <= q;
  const bool reverse2 = q >= 0.0 && q < p && -r >= q;
  return forward || reverse1 || reverse2;
}

std::pair<Matrix, Matrix> instance_matrices(InequalityId target,
                                            const SearchConfig& cfg,
                                            std::uint64_t ordinal, int* dim_out,
                                            SampleFamily* family_out) {
  const auto families = cfg.families.empty() ? default_families() : cfg.families;
  const int dim = cfg.dims[ordinal % cfg.dims.size()];
  const SampleFamily family =
      families[(ordinal / cfg.dims.size()) % families.size()];
  SamplerSpec spec;
  spec.dim = dim;
  spec.family = family;
  spec.seed = derive_seed(cfg.seed, ordinal);
  spec.scale = cfg.scale;
  auto mats = sample_pair(spec);
  if (needs_hermitian_inputs(target)) {
    mats.first = recentered_hermitian(mats.first);
    mats.second = recentered_hermitian(mats.second);
  }
  if (dim_out != nullptr) *dim_out = dim;
  if (family_out != nullptr) *family_out = family;
  return mats;
}

std::vector<SearchRecord> evaluate_instance(InequalityId target,
                                            const SearchConfig& cfg,
                                            std::uint64_t ordinal,
                                            const TolerancePolicy& pol) {
  return InstanceEvaluator(target, cfg, ordinal, pol).run();
}

SweepRunner::SweepRunner(InequalityId target, SearchConfig cfg, TolerancePolicy pol)
    : target_(target), cfg_(std::move(cfg)), pol_(pol) {
  validate_config(cfg_);
  pol_.validate();
}

void SweepRunner::absorb(std::vector<SearchRecord>&& records, const Sink& sink) {
  for (SearchRecord& r : records) {
    ++counts_.checks;
    if (r.verdict == "Degenerate") {
      ++counts_.degenerate;
      const auto colon = r.note.find(':');
      counts_.degenerate_reasons[colon == std::string::npos
                                     ? std::string("Degenerate")
                                     : r.note.substr(0, colon)]++;
    } else {
      if (r.verdict == "Violated")
        ++counts_.violated;
      else
        ++counts_.holds;
      const double slack = pol_.slack(r.lhs, r.rhs);
      if (r.gap <= -10.0 * slack)
        ++counts_.violation_findings;
      else if (r.gap < 0.0)
        ++counts_.near_violations;

      const auto pos =
          std::lower_bound(best_.begin(), best_.end(), r, record_less);
      if (pos != best_.end() ||
          best_.size() < static_cast<std::size_t>(cfg_.keep_best))
        best_.insert(pos, r);
      if (best_.size() > static_cast<std::size_t>(cfg_.keep_best))
        best_.resize(cfg_.keep_best);
    }
    if (sink) sink(r);
  }
}

void SweepRunner::run(const Sink& sink, std::uint64_t max_instances, int workers) {
  const std::uint64_t remaining = cfg_.budget > cursor_ ? cfg_.budget - cursor_ : 0;
  const std::uint64_t end = cursor_ + std::min(remaining, max_instances);
  if (workers <= 1) {
    while (cursor_ < end) {
      absorb(evaluate_instance(target_, cfg_, cursor_, pol_), sink);
      ++cursor_;
    }
    return;
  }
  while (cursor_ < end) {
    const std::uint64_t block =
        std::min<std::uint64_t>(end - cursor_, 64ULL * workers);
    std::vector<std::vector<SearchRecord>> results(block);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::uint64_t i = w; i < block; i += workers)
            results[i] = evaluate_instance(target_, cfg_, cursor_ + i, pol_);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    // merge in ordinal order: single writer
    for (std::uint64_t i = 0; i < block; ++i) absorb(std::move(results[i]), sink);
    cursor_ += block;
  }
}

std::vector<SearchRecord> SweepRunner::best_records(bool with_payload) const {
  std::vector<SearchRecord> out = best_;
  if (with_payload) {
    for (SearchRecord& r : out)
      r.payload = instance_matrices(target_, cfg_, r.ordinal, nullptr, nullptr);
  }
  return out;
}

void SweepRunner::save_state(const std::string& path) const {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["target"] = std::string(to_string(target_));
  j["config"] = config_to_json(cfg_);
  j["cursor"] = cursor_;
  j["counts"] = counts_to_json(counts_);
  nlohmann::ordered_json best = nlohmann::ordered_json::array();
  for (const SearchRecord& r : best_)
    best.push_back(record_to_json(r, /*with_payload=*/false));
  j["best"] = std::move(best);
  j["checksum"] = fnv1a(j.dump());

  std::ofstream out(path);
  if (!out) throw IoError("cannot write state file: " + path);
  out << j.dump(2) << "\n";
}

SweepRunner SweepRunner::load_state(const std::string& path, InequalityId target,
                                    const SearchConfig& cfg,
                                    const TolerancePolicy& pol) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file: " + path);
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CorruptState(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!j.contains("checksum")) throw CorruptState("state file lacks a checksum");
  const auto stored = j.at("checksum").get<std::uint64_t>();
  j.erase("checksum");
  if (fnv1a(j.dump()) != stored)
    throw CorruptState("state file checksum mismatch");
  if (j.at("version").get<int>() != 1)
    throw CorruptState("unsupported state file version");
  if (j.at("target").get<std::string>() != to_string(target))
    throw CorruptState("state file is bound to a different target");
  if (j.at("config") != config_to_json(cfg))
    throw CorruptState("state file is bound to a different configuration");

  SweepRunner runner(target, cfg, pol);
  runner.cursor_ = j.at("cursor").get<std::uint64_t>();
  runner.counts_ = counts_from_json(j.at("counts"));
  for (const auto& rec : j.at("best"))
    runner.best_.push_back(record_from_json(rec));
  return runner;
}

SweepResult run_sweep(InequalityId target, const SearchConfig& cfg,
                      const TolerancePolicy& pol, const SweepRunner::Sink& sink,
                      int workers) {
  SweepRunner runner(target, cfg, pol);
  runner.run(sink, UINT64_MAX, workers);
  SweepResult result;
  result.counts = runner.counts();
  result.best = runner.best_records(/*with_payload=*/true);
  return result;
}

SearchRecord refine(const SearchRecord& candidate, const SearchConfig& cfg,
                    const TolerancePolicy& pol) {
  const auto target = parse_inequality_id(candidate.target);
  if (!target.has_value() || !is_conjecture(*target))
    throw DomainError("refine: only conjecture candidates are refined");
  if (!candidate.payload.has_value())
    throw DomainError("refine: candidate carries no matrix payload");

  const auto lower_factor = [](const Matrix& m) -> Matrix {
    Eigen::LLT<Matrix> llt(m);
    if (llt.info() == Eigen::Success) return llt.matrixL();
    const double ridge =
        1e-12 * std::max(1.0, m.trace().real() / static_cast<double>(m.rows()));
    Eigen::LLT<Matrix> ridged(m + ridge * Matrix::Identity(m.rows(), m.cols()));
    if (ridged.info() != Eigen::Success)
      throw DomainError("refine: candidate matrix is not PSD enough to factor");
    return ridged.matrixL();
  };

  Matrix best_a = candidate.payload->first;
  Matrix best_b = candidate.payload->second;
  Matrix l = lower_factor(best_a);
  Matrix m = lower_factor(best_b);
  CheckResult best = evaluate_conjecture_point(*target, best_a, best_b,
                                               candidate.params,
                                               candidate.diagnostics, pol);
  const double start_gap = best.gap;

  Rng rng(derive_seed(derive_seed(cfg.seed, candidate.ordinal), 3));
  const auto n = best_a.rows();
  double step = cfg.step_init;
  for (int it = 0; it < cfg.refine_steps; ++it) {
    Matrix lp = l;
    Matrix mp = m;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = j; i < n; ++i) lp(i, j) += step * rng.complex_normal();
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = j; i < n; ++i) mp(i, j) += step * rng.complex_normal();
    const Matrix ap = hermitian_part(lp * lp.adjoint());
    const Matrix bp = hermitian_part(mp * mp.adjoint());
    bool improved = false;
    try {
      CheckResult cr = evaluate_conjecture_point(*target, ap, bp, candidate.params,
                                                 candidate.diagnostics, pol);
      if (cr.verdict != Verdict::Degenerate && cr.gap < best.gap) {
        improved = true;
        l = lp;
        m = mp;
        best_a = ap;
        best_b = bp;
        best = std::move(cr);
      }
    } catch (const Error&) {
      // rejected step
    }
    step = improved ? std::min(step * 1.5, 1e2) : std::max(step * 0.6, 1e-9);
  }

  SearchRecord out = candidate;
  out.lhs = best.lhs;
  out.rhs = best.rhs;
  out.gap = best.gap;
  out.rel_gap = best.rel_gap;
  out.verdict = to_string(best.verdict);
  for (const auto& [k, v] : best.diagnostics) out.diagnostics[k] = v;
  out.diagnostics["refined"] = 1.0;
  out.diagnostics["refine_steps"] = cfg.refine_steps;
  out.diagnostics["start_gap"] = start_gap;
  out.payload = std::make_pair(best_a, best_b);
  return out;
}

bool confirm_violation(const SearchRecord& record, const TolerancePolicy& pol) {
  const auto target = parse_inequality_id(record.target);
  if (!target.has_value() || !is_conjecture(*target) || !record.payload.has_value())
    return false;
  try {
    const CheckResult cr = evaluate_conjecture_point(
        *target, record.payload->first, record.payload->second, record.params,
        record.diagnostics, pol.tightened(10.0));
    return cr.gap <= -10.0 * pol.slack(cr.lhs, cr.rhs);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace araki
