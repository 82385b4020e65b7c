// araki — numerical verification toolkit for trace inequalities of
// Araki type, log-majorization relations, and quantum Renyi divergences.
//
// Subcommands:
//   verify      sweep one inequality (or all) over seeded instances
//   search      stochastic counterexample search for the conjectured ids
//   divergence  evaluate divergences and their ordering chain on files
//
// Canonical outputs carry no timestamps; identical flags and seed give
// byte-identical reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "araki/divergences.hpp"
#include "araki/inequalities.hpp"
#include "araki/matrix_io.hpp"
#include "araki/report.hpp"
#include "araki/search.hpp"

namespace {

using namespace araki;

double env_or(const char* name, double fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return std::stod(v);
  } catch (const std::exception&) {
    throw DomainError(std::string("environment variable ") + name +
                      " is not a number: " + v);
  }
}

TolerancePolicy policy_from_env() {
  TolerancePolicy pol;
  pol.tol_abs = env_or("ARAKI_TOL_ABS", pol.tol_abs);
  pol.tol_rel = env_or("ARAKI_TOL_REL", pol.tol_rel);
  pol.psd_clip = env_or("ARAKI_PSD_CLIP", pol.psd_clip);
  pol.pd_floor = env_or("ARAKI_PD_FLOOR", pol.pd_floor);
  return pol;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split(s, ',')) out.push_back(std::stod(tok));
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) out.push_back(std::stoi(tok));
  return out;
}

// "s=0,0.5,1;t=1,2" -> grid
ParamGrid parse_grid(const std::string& s) {
  ParamGrid grid;
  for (const auto& part : split(s, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw DomainError("grid entry must look like name=v1,v2: " + part);
    grid[part.substr(0, eq)] = parse_doubles(part.substr(eq + 1));
  }
  return grid;
}

std::vector<SampleFamily> parse_families(const std::string& s) {
  std::vector<SampleFamily> out;
  for (const auto& tok : split(s, ',')) {
    const auto f = parse_sample_family(tok);
    if (!f.has_value()) throw DomainError("unknown sample family: " + tok);
    out.push_back(*f);
  }
  return out;
}

struct LineWriter {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream = nullptr;
  bool csv = false;
  bool header_written = false;

  static LineWriter open(const std::string& path, const std::string& format) {
    LineWriter w;
    w.csv = format == "csv";
    if (!path.empty()) {
      w.file = std::make_unique<std::ofstream>(path);
      if (!*w.file) throw IoError("cannot open output file: " + path);
      w.stream = w.file.get();
    }
    return w;
  }

  void write(const SearchRecord& r) {
    if (stream == nullptr) return;
    if (csv && !header_written) {
      *stream << record_csv_header() << "\n";
      header_written = true;
    }
    *stream << (csv ? record_to_csv(r) : record_to_report_line(r)) << "\n";
  }
};

struct VerifyOptions {
  std::string inequality = "all";
  std::string dims = "2,3";
  std::uint64_t samples = 50;
  std::uint64_t seed = 1;
  std::string s_grid;
  std::string param_grid;
  std::string families;
  std::string out;
  std::string format = "jsonl";
  int workers = 1;
};

SearchConfig verify_config(const VerifyOptions& opt, InequalityId id) {
  SearchConfig cfg;
  cfg.target = id;
  cfg.dims = parse_ints(opt.dims);
  cfg.budget = opt.samples;
  cfg.seed = opt.seed;
  if (!opt.param_grid.empty()) cfg.grid = parse_grid(opt.param_grid);
  if (!opt.s_grid.empty()) cfg.grid["s"] = parse_doubles(opt.s_grid);
  if (!opt.families.empty()) cfg.families = parse_families(opt.families);
  return cfg;
}

void print_sweep_summary(std::ostream& os, InequalityId id, const SweepResult& res) {
  os << to_string(id) << ": checks=" << res.counts.checks
     << " holds=" << res.counts.holds << " violated=" << res.counts.violated
     << " degenerate=" << res.counts.degenerate
     << " near_violations=" << res.counts.near_violations
     << " findings=" << res.counts.violation_findings;
  if (!res.best.empty()) os << " min_gap=" << format_double(res.best.front().gap);
  os << "\n";
  for (const auto& [reason, count] : res.counts.degenerate_reasons)
    os << "  degenerate " << reason << ": " << count << "\n";
}

int run_remark(const VerifyOptions& opt, const TolerancePolicy& pol) {
  const auto results = remark_instance(pol);
  LineWriter writer = LineWriter::open(opt.out, opt.format);
  const char* labels[3] = {"single eigenprojection P_2", "prefix k=1", "prefix k=2"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const CheckResult& c = results[i];
    std::cout << "remark (" << labels[i] << "): lhs=" << format_double(c.lhs)
              << " rhs=" << format_double(c.rhs) << " gap=" << format_double(c.gap)
              << " verdict=";
    if (i == 0 && c.verdict == Verdict::Violated)
      std::cout << "Violated-by-design";
    else
      std::cout << to_string(c.verdict);
    std::cout << "\n";
    SearchRecord r = record_from_check(c);
    r.dim = 2;
    r.master_seed = opt.seed;
    r.check_index = i;
    writer.write(r);
  }
  return 0;
}

int run_verify(const VerifyOptions& opt, const TolerancePolicy& pol) {
  if (opt.inequality == "remark") return run_remark(opt, pol);

  std::vector<InequalityId> targets;
  if (opt.inequality == "all") {
    for (const char* name :
         {"gt", "alt", "lie_trotter", "ah94", "blp", "blp_trace", "gblp", "hp93",
          "ma12", "main_direct", "main_converse", "projector", "pinch",
          "jensen_step", "lemma2", "gt_limit", "s2", "lemma4", "conj1", "conj2"})
      targets.push_back(*parse_inequality_id(name));
  } else {
    const auto id = parse_inequality_id(opt.inequality);
    if (!id.has_value()) throw DomainError("unknown inequality id: " + opt.inequality);
    targets.push_back(*id);
  }

  LineWriter writer = LineWriter::open(opt.out, opt.format);
  bool proven_violated = false;
  for (const InequalityId id : targets) {
    const SearchConfig cfg = verify_config(opt, id);
    const SweepResult res = run_sweep(
        id, cfg, pol, [&](const SearchRecord& r) { writer.write(r); }, opt.workers);
    print_sweep_summary(std::cout, id, res);
    if (!is_conjecture(id) && res.counts.violated > 0) proven_violated = true;
  }
  return proven_violated ? 2 : 0;
}

struct SearchOptions {
  std::string target = "conj1";
  std::string dims = "2,3,4";
  std::uint64_t budget = 1000;
  std::uint64_t seed = 1;
  int refine_steps = 200;
  int refine_top = 10;
  double step_init = 0.1;
  std::string grid;
  std::string families;
  std::string state;
  std::string out;
  int workers = 1;
};

int run_search(const SearchOptions& opt, const TolerancePolicy& pol) {
  const auto id = parse_inequality_id(opt.target);
  if (!id.has_value() || !is_conjecture(*id))
    throw DomainError("search target must be conj1 or conj2");

  SearchConfig cfg;
  cfg.target = *id;
  cfg.dims = parse_ints(opt.dims);
  cfg.budget = opt.budget;
  cfg.seed = opt.seed;
  cfg.refine_steps = opt.refine_steps;
  cfg.refine_top = opt.refine_top;
  cfg.step_init = opt.step_init;
  if (!opt.grid.empty()) cfg.grid = parse_grid(opt.grid);
  if (!opt.families.empty()) cfg.families = parse_families(opt.families);

  std::unique_ptr<SweepRunner> runner;
  if (!opt.state.empty() && std::ifstream(opt.state).good()) {
    runner = std::make_unique<SweepRunner>(
        SweepRunner::load_state(opt.state, *id, cfg, pol));
    std::cout << "resumed from " << opt.state << " at instance " << runner->cursor()
              << "/" << cfg.budget << "\n";
  } else {
    runner = std::make_unique<SweepRunner>(*id, cfg, pol);
  }

  // Periodic checkpointing keeps interrupted sweeps resumable.
  const std::uint64_t chunk = 64;
  while (!runner->done()) {
    runner->run({}, chunk, opt.workers);
    if (!opt.state.empty()) runner->save_state(opt.state);
  }

  std::vector<SearchRecord> findings = runner->best_records(/*with_payload=*/true);
  if (cfg.refine_steps > 0) {
    const std::size_t top =
        std::min<std::size_t>(findings.size(), static_cast<std::size_t>(cfg.refine_top));
    for (std::size_t i = 0; i < top; ++i) findings.push_back(refine(findings[i], cfg, pol));
  }
  std::sort(findings.begin(), findings.end(),
            [](const SearchRecord& x, const SearchRecord& y) {
              if (x.gap != y.gap) return x.gap < y.gap;
              if (x.ordinal != y.ordinal) return x.ordinal < y.ordinal;
              return x.check_index < y.check_index;
            });

  bool confirmed = false;
  for (const SearchRecord& r : findings) {
    const double slack = pol.slack(r.lhs, r.rhs);
    if (r.verdict != "Degenerate" && r.gap <= -10.0 * slack &&
        confirm_violation(r, pol)) {
      confirmed = true;
      std::cout << "CONFIRMED violation: " << record_to_report_line(r) << "\n";
    }
  }

  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) throw IoError("cannot open findings file: " + opt.out);
    for (const SearchRecord& r : findings) out << record_to_report_line(r) << "\n";
  }

  const auto& counts = runner->counts();
  std::cout << opt.target << ": checks=" << counts.checks
            << " holds=" << counts.holds << " violated=" << counts.violated
            << " degenerate=" << counts.degenerate
            << " near_violations=" << counts.near_violations
            << " findings=" << counts.violation_findings;
  if (!findings.empty())
    std::cout << " min_gap=" << format_double(findings.front().gap);
  std::cout << "\n";
  return confirmed ? 3 : 0;
}

struct DivergenceOptions {
  std::string rho_path;
  std::string sigma_path;
  std::string alphas = "0.5";
  std::string kinds;
  std::string out;
};

int run_divergence(const DivergenceOptions& opt, const TolerancePolicy& pol) {
  const Matrix rho = load_matrix(opt.rho_path);
  const Matrix sigma = load_matrix(opt.sigma_path);
  const std::vector<double> alphas = parse_doubles(opt.alphas);

  std::vector<DivergenceKind> kinds;
  if (opt.kinds.empty()) {
    for (const char* name : {"petz", "sandwiched", "log_euclidean", "geometric",
                             "umegaki", "belavkin_staszewski"})
      kinds.push_back(*parse_divergence_kind(name));
  } else {
    for (const auto& tok : split(opt.kinds, ',')) {
      const auto k = parse_divergence_kind(tok);
      if (!k.has_value()) throw DomainError("unknown divergence kind: " + tok);
      kinds.push_back(*k);
    }
  }

  for (const DivergenceKind kind : kinds) {
    const bool needs_alpha = kind != DivergenceKind::Umegaki &&
                             kind != DivergenceKind::BelavkinStaszewski;
    if (!needs_alpha) {
      std::cout << to_string(kind) << ": ";
      try {
        std::cout << format_double(divergence(kind, rho, sigma, std::nullopt, pol));
      } catch (const Error& e) {
        std::cout << "degenerate (" << e.what() << ")";
      }
      std::cout << "\n";
      continue;
    }
    for (const double alpha : alphas) {
      std::cout << to_string(kind) << " alpha=" << format_double(alpha) << ": ";
      try {
        std::cout << format_double(divergence(kind, rho, sigma, alpha, pol));
      } catch (const Error& e) {
        std::cout << "degenerate (" << e.what() << ")";
      }
      std::cout << "\n";
    }
  }

  RealVector grid(static_cast<Eigen::Index>(alphas.size()));
  for (std::size_t i = 0; i < alphas.size(); ++i)
    grid[static_cast<Eigen::Index>(i)] = alphas[i];
  std::unique_ptr<std::ofstream> out;
  if (!opt.out.empty()) {
    out = std::make_unique<std::ofstream>(opt.out);
    if (!*out) throw IoError("cannot open output file: " + opt.out);
  }
  for (const CheckResult& c : ordering_report(rho, sigma, grid, pol)) {
    std::cout << "ordering " << c.inequality_id;
    if (c.params.alpha.has_value())
      std::cout << " alpha=" << format_double(*c.params.alpha);
    std::cout << ": gap=" << format_double(c.gap) << " " << to_string(c.verdict)
              << "\n";
    if (out) *out << record_to_report_line(record_from_check(c)) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical checks for Araki-type trace inequalities"};
  app.require_subcommand(1);

  TolerancePolicy pol;
  try {
    pol = policy_from_env();
  } catch (const araki::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "sweep an inequality over seeded instances");
  verify->add_option("--inequality", vopt.inequality,
                     "inequality id, 'all', or 'remark'");
  verify->add_option("--dims", vopt.dims, "comma-separated dimensions");
  verify->add_option("--samples", vopt.samples, "instances per sweep");
  verify->add_option("--seed", vopt.seed, "master seed");
  verify->add_option("--s-grid", vopt.s_grid, "comma-separated s values");
  verify->add_option("--param-grid", vopt.param_grid, "name=v,v;name=v grids");
  verify->add_option("--families", vopt.families, "comma-separated sample families");
  verify->add_option("--out", vopt.out, "report stream path");
  verify->add_option("--format", vopt.format, "jsonl|csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  verify->add_option("--workers", vopt.workers, "parallel workers");
  verify->add_option("--tol-abs", pol.tol_abs, "absolute tolerance");
  verify->add_option("--tol-rel", pol.tol_rel, "relative tolerance");

  SearchOptions sopt;
  auto* search = app.add_subcommand("search", "counterexample search for conj1/conj2");
  search->add_option("--target", sopt.target, "conj1|conj2");
  search->add_option("--dims", sopt.dims, "comma-separated dimensions");
  search->add_option("--budget", sopt.budget, "instance budget");
  search->add_option("--seed", sopt.seed, "master seed");
  search->add_option("--refine-steps", sopt.refine_steps, "descent steps per candidate");
  search->add_option("--refine-top", sopt.refine_top, "candidates refined");
  search->add_option("--step-init", sopt.step_init, "initial descent step");
  search->add_option("--grid", sopt.grid, "name=v,v;name=v grids");
  search->add_option("--families", sopt.families, "comma-separated sample families");
  search->add_option("--state", sopt.state, "resumable state file");
  search->add_option("--out", sopt.out, "findings file (JSONL, ascending gap)");
  search->add_option("--workers", sopt.workers, "parallel workers");
  search->add_option("--tol-abs", pol.tol_abs, "absolute tolerance");
  search->add_option("--tol-rel", pol.tol_rel, "relative tolerance");

  DivergenceOptions dopt;
  auto* div = app.add_subcommand("divergence", "divergence table and ordering chain");
  div->add_option("--rho", dopt.rho_path, "density matrix file")->required();
  div->add_option("--sigma", dopt.sigma_path, "density matrix file")->required();
  div->add_option("--alpha", dopt.alphas, "comma-separated alpha values");
  div->add_option("--kinds", dopt.kinds, "comma-separated divergence kinds");
  div->add_option("--out", dopt.out, "ordering report path (JSONL)");
  div->add_option("--tol-abs", pol.tol_abs, "absolute tolerance");
  div->add_option("--tol-rel", pol.tol_rel, "relative tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    pol.validate();
    if (verify->parsed()) return run_verify(vopt, pol);
    if (search->parsed()) return run_search(sopt, pol);
    if (div->parsed()) return run_divergence(dopt, pol);
  } catch (const araki::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
