#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "araki/check_result.hpp"
#include "araki/inequalities.hpp"
#include "araki/sampling.hpp"

namespace araki {

// Value grid per exponent name ("s", "t", "r", "p", "q", "alpha").
using ParamGrid = std::map<std::string, std::vector<double>>;

struct SearchConfig {
  InequalityId target = InequalityId::Conj1;
  std::vector<int> dims{2, 3};
  std::uint64_t budget = 100;  // instance count; each instance runs the full grid
  std::uint64_t seed = 1;
  int refine_steps = 0;
  double step_init = 0.1;
  int refine_top = 10;  // lowest-gap candidates taken into refinement
  int keep_best = 32;   // lowest-gap records retained
  double scale = 1.0;
  std::vector<SampleFamily> families;  // empty = default mix
  ParamGrid grid;                      // empty = default for the target
};

// One evaluated check, keyed by its deterministic derivation path
// (master seed, instance ordinal, check index). Matrix payloads ride
// along only for the best candidates and are regenerable from the path.
struct SearchRecord {
  std::string target;
  ExponentParams params;
  int dim = 0;
  std::string family;
  std::uint64_t master_seed = 0;
  std::uint64_t ordinal = 0;
  std::uint64_t check_index = 0;  // position within the instance's grid expansion
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double rel_gap = 0.0;
  std::string verdict;
  std::map<std::string, double> diagnostics;
  std::string note;
  std::optional<std::pair<Matrix, Matrix>> payload;
};

struct SweepCounts {
  std::uint64_t checks = 0;
  std::uint64_t holds = 0;
  std::uint64_t violated = 0;
  std::uint64_t degenerate = 0;
  // gap in (-10 tol, 0): numerical-noise candidates, logged not reported
  std::uint64_t near_violations = 0;
  // gap <= -10 tol: reportable findings (for conjecture targets)
  std::uint64_t violation_findings = 0;
  std::map<std::string, std::uint64_t> degenerate_reasons;
};

struct SweepResult {
  SweepCounts counts;
  std::vector<SearchRecord> best;  // ascending gap, payloads attached
};

ParamGrid default_grid(InequalityId id);
std::vector<SampleFamily> default_families();

// GBLP parameter-region predicate: forward 0 < q <= p, r >= 0; reversed
// when 0 <= r <= p <= q (p > 0) or 0 <= q < p with -r >= q.
bool gblp_in_region(double p, double q, double r);

// The (A, B) pair an instance feeds to the target (already recentered
// to Hermitian for the exponential-family inequalities).
std::pair<Matrix, Matrix> instance_matrices(InequalityId target,
                                            const SearchConfig& cfg,
                                            std::uint64_t ordinal, int* dim_out,
                                            SampleFamily* family_out);

// All checks of one instance, in deterministic order. Per-check errors
// become Degenerate records with the reason in the note.
std::vector<SearchRecord> evaluate_instance(InequalityId target,
                                            const SearchConfig& cfg,
                                            std::uint64_t ordinal,
                                            const TolerancePolicy& pol);

// Deterministic resumable sweep. Instances derive from (seed, ordinal)
// alone, so any worker partition yields the single-worker results, and
// a resumed run continues the stream exactly.
class SweepRunner {
 public:
  using Sink = std::function<void(const SearchRecord&)>;

  SweepRunner(InequalityId target, SearchConfig cfg, TolerancePolicy pol);

  bool done() const { return cursor_ >= cfg_.budget; }
  std::uint64_t cursor() const { return cursor_; }
  InequalityId target() const { return target_; }
  const SearchConfig& config() const { return cfg_; }
  const SweepCounts& counts() const { return counts_; }

  // Processes up to max_instances instances; records flow through the
  // sink in (ordinal, check_index) order.
  void run(const Sink& sink = {}, std::uint64_t max_instances = UINT64_MAX,
           int workers = 1);

  // Lowest-gap records, ascending; payloads regenerated on demand.
  std::vector<SearchRecord> best_records(bool with_payload = true) const;

  void save_state(const std::string& path) const;

  // Rebuilds a runner from a state file; throws CorruptState on checksum
  // mismatch or when the file binds a different target/config.
  static SweepRunner load_state(const std::string& path, InequalityId target,
                                const SearchConfig& cfg, const TolerancePolicy& pol);

 private:
  void absorb(std::vector<SearchRecord>&& records, const Sink& sink);

  InequalityId target_;
  SearchConfig cfg_;
  TolerancePolicy pol_;
  std::uint64_t cursor_ = 0;
  SweepCounts counts_;
  std::vector<SearchRecord> best_;  // sorted ascending (gap, ordinal, check_index)
};

SweepResult run_sweep(InequalityId target, const SearchConfig& cfg,
                      const TolerancePolicy& pol,
                      const SweepRunner::Sink& sink = {}, int workers = 1);

// Adaptive stochastic descent on the gap for conjecture candidates:
// A = L L^dagger, B = M M^dagger with lower-triangular factors, entries
// perturbed by Gaussian steps; the step grows 1.5x on improvement and
// shrinks 0.6x on failure, clamped to [1e-9, 1e2]. Monotone: the result
// never has a larger gap than the input. Deterministic given cfg.seed
// and the candidate's ordinal.
SearchRecord refine(const SearchRecord& candidate, const SearchConfig& cfg,
                    const TolerancePolicy& pol);

// Re-evaluates a candidate's payload under a 10x tightened policy;
// true when the gap still clears the -10 * slack finding threshold.
bool confirm_violation(const SearchRecord& record, const TolerancePolicy& pol);

}  // namespace araki
