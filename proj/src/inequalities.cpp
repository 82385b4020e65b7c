#include "araki/inequalities.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace araki {

PinchedFamily::PinchedFamily(SpectralDecomposition base, int k, double epsilon)
    : base_(std::move(base)), k_(k), epsilon_(epsilon) {
  const int n = base_.dim();
  if (k < 1 || k > n) throw DomainError("PinchedFamily: k out of range");
  const double lk = base_.eigenvalues[k - 1];
  if (epsilon < 0.0) throw DomainError("PinchedFamily: epsilon must be >= 0");
  if (epsilon > 0.0 && !(epsilon < lk))
    throw DomainError("PinchedFamily: epsilon must lie in (0, lambda_k)");
  pinched_.eigenvectors = base_.eigenvectors;
  pinched_.eigenvalues = base_.eigenvalues;
  for (int i = k; i < n; ++i) pinched_.eigenvalues[i] = lk - epsilon;
}

namespace {

void require_hyp(bool ok, const char* msg) {
  if (!ok) throw HypothesisViolated(msg);
}

RealVector clipped_or_hyp(const SpectralDecomposition& d, const TolerancePolicy& pol,
                          const char* who) {
  try {
    return clipped_psd_spectrum(d.eigenvalues, pol);
  } catch (const DomainError&) {
    throw HypothesisViolated(std::string(who) + " must be PSD");
  }
}

void require_pd(const SpectralDecomposition& d, const TolerancePolicy& pol,
                const char* msg) {
  if (classify_psd(d.eigenvalues, pol) != Definiteness::PositiveDefinite)
    throw HypothesisViolated(msg);
}

// Shared precomputation on a PSD pair (A, B).
struct PairContext {
  Matrix a_h, b_h;  // symmetrized inputs
  SpectralDecomposition da, db;
  RealVector lam_a, lam_b;  // clipped spectra
  Matrix sandwich_ab;       // herm(A^{1/2} B A^{1/2})
  SpectralDecomposition ds;
  RealVector lam_s;
};

PairContext make_pair_context(const Matrix& a, const Matrix& b,
                              const TolerancePolicy& pol,
                              bool need_sandwich = true) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionMismatch("inequality check: operands must be square of equal dim");
  PairContext c;
  c.a_h = hermitian_part(a);
  c.b_h = hermitian_part(b);
  c.da = decompose(c.a_h);
  c.db = decompose(c.b_h);
  c.lam_a = clipped_or_hyp(c.da, pol, "A");
  c.lam_b = clipped_or_hyp(c.db, pol, "B");
  if (need_sandwich) {
    const Matrix ah = c.da.apply_values(spectrum_power(c.lam_a, 0.5, pol));
    c.sandwich_ab = hermitian_part(ah * c.b_h * ah);
    c.ds = decompose(c.sandwich_ab);
    try {
      c.lam_s = clipped_psd_spectrum(c.ds.eigenvalues, pol);
    } catch (const DomainError&) {
      throw NonConvergence("sandwich produced eigenvalues below the PSD floor");
    }
  }
  return c;
}

Matrix power_of(const SpectralDecomposition& d, const RealVector& clipped, double s,
                const TolerancePolicy& pol) {
  return d.apply_values(spectrum_power(clipped, s, pol));
}

// Evaluate a weight function on a clipped spectrum; domain failures are
// hypothesis failures for RequirePd-style callers.
RealVector weight_values_or_hyp(const ScalarFunction& f, const RealVector& clipped,
                                const char* who) {
  try {
    return evaluate_on_spectrum(f, clipped);
  } catch (const DomainError& e) {
    throw HypothesisViolated(std::string(who) + ": " + e.what());
  }
}

std::map<std::string, double> trace_diagnostics(Complex lhs, Complex rhs) {
  return {{"lhs_imag", lhs.imag()}, {"rhs_imag", rhs.imag()}};
}

// Sandwich with the pinched matrix in its own eigenbasis.
struct PinchedSandwich {
  Matrix matrix;  // A~^{1/2} B A~^{1/2}
  SpectralDecomposition decomp;
  RealVector lam;
};

PinchedSandwich pinched_sandwich(const PinchedFamily& pf, const Matrix& b_h,
                                 const TolerancePolicy& pol) {
  const SpectralDecomposition& dp = pf.pinched();
  const RealVector lam_p = clipped_psd_spectrum(dp.eigenvalues, pol);
  const Matrix ph = power_of(dp, lam_p, 0.5, pol);
  PinchedSandwich out;
  out.matrix = hermitian_part(ph * b_h * ph);
  out.decomp = decompose(out.matrix);
  out.lam = clipped_psd_spectrum(out.decomp.eigenvalues, pol);
  return out;
}

CheckResult conj1_family_gap(const char* id, const ScalarFunction& f, const Matrix& a,
                             const Matrix& b, double s, const TolerancePolicy& pol) {
  PairContext c = make_pair_context(a, b, pol);
  const RealVector fvals = weight_values_or_hyp(f, c.lam_a, id);
  require_hyp(is_nonneg_nondecreasing(c.lam_a, fvals),
              "f must be nonnegative and nondecreasing on spec(A)");
  const Matrix fa = c.da.apply_values(fvals);
  const Matrix as = power_of(c.da, c.lam_a, s, pol);
  const Matrix bs = power_of(c.db, c.lam_b, s, pol);
  const Matrix ss = power_of(c.ds, c.lam_s, s, pol);
  const Complex lhs = trace_product_complex(fa, ss);
  const Complex rhs = trace_product3_complex(fa, as, bs);
  ExponentParams prm;
  prm.s = s;
  return make_check_result(id, prm, lhs.real(), rhs.real(), pol,
                           trace_diagnostics(lhs, rhs));
}

}  // namespace

CheckResult gap_main_direct(const ScalarFunction& f, const Matrix& a, const Matrix& b,
                            double s, const TolerancePolicy& pol) {
  require_hyp(s >= 0.0 && s <= 1.0, "main_direct: s must lie in [0,1]");
  PairContext c = make_pair_context(a, b, pol);
  const RealVector fvals = weight_values_or_hyp(f, c.lam_a, "main_direct");
  require_hyp(is_nonneg_nondecreasing(c.lam_a, fvals),
              "main_direct: f must be nonnegative and nondecreasing on spec(A)");
  const Matrix fa = c.da.apply_values(fvals);
  const Matrix as = power_of(c.da, c.lam_a, s, pol);
  const Matrix bs = power_of(c.db, c.lam_b, s, pol);
  const Matrix ss = power_of(c.ds, c.lam_s, s, pol);
  const Complex lhs = trace_product3_complex(fa, as, bs);
  const Complex rhs = trace_product_complex(fa, ss);
  ExponentParams prm;
  prm.s = s;
  return make_check_result("main_direct", prm, lhs.real(), rhs.real(), pol,
                           trace_diagnostics(lhs, rhs));
}

CheckResult gap_main_converse(const ScalarFunction& g, const Matrix& a, const Matrix& b,
                              double s, const TolerancePolicy& pol, LimitMode mode) {
  require_hyp(s >= 0.0 && s <= 1.0, "main_converse: s must lie in [0,1]");
  PairContext c = make_pair_context(a, b, pol);
  if (mode == LimitMode::RequirePd &&
      classify_psd(c.da.eigenvalues, pol) != Definiteness::PositiveDefinite)
    throw SingularPower("main_converse: A must be PD (LimitMode::Clip evaluates the limit)");

  ExponentParams prm;
  prm.s = s;
  RealVector gvals;
  try {
    gvals = evaluate_on_spectrum(g, c.lam_a);
  } catch (const DomainError& e) {
    if (mode == LimitMode::Clip)
      return make_degenerate_result("main_converse", prm, e.what());
    throw HypothesisViolated(std::string("main_converse: ") + e.what());
  }
  require_hyp(is_power_weighted_nonincreasing(c.lam_a, gvals, s),
              "main_converse: x^s g(x) must be nonnegative and nonincreasing on spec(A)");
  const Matrix ga = c.da.apply_values(gvals);
  const Matrix as = power_of(c.da, c.lam_a, s, pol);
  const Matrix bs = power_of(c.db, c.lam_b, s, pol);
  const Matrix ss = power_of(c.ds, c.lam_s, s, pol);
  const Complex lhs = trace_product_complex(ga, ss);
  const Complex rhs = trace_product3_complex(ga, as, bs);
  return make_check_result("main_converse", prm, lhs.real(), rhs.real(), pol,
                           trace_diagnostics(lhs, rhs));
}

namespace {

CheckResult projector_gap(const char* note, const Matrix& proj, const PairContext& c,
                          double s, const TolerancePolicy& pol,
                          std::map<std::string, double> diag) {
  const Matrix as = power_of(c.da, c.lam_a, s, pol);
  const Matrix bs = power_of(c.db, c.lam_b, s, pol);
  const Matrix ss = power_of(c.ds, c.lam_s, s, pol);
  const Complex lhs = trace_product3_complex(proj, as, bs);
  const Complex rhs = trace_product_complex(proj, ss);
  diag.merge(trace_diagnostics(lhs, rhs));
  ExponentParams prm;
  prm.s = s;
  CheckResult r = make_check_result("projector", prm, lhs.real(), rhs.real(), pol,
                                    std::move(diag));
  if (note != nullptr) r.note = note;
  return r;
}

}  // namespace

CheckResult gap_projector(const Matrix& a, const Matrix& b, int k, double s,
                          const TolerancePolicy& pol) {
  require_hyp(s >= 0.0 && s <= 1.0, "projector: s must lie in [0,1]");
  PairContext c = make_pair_context(a, b, pol);
  require_hyp(k >= 1 && k <= c.da.dim(), "projector: k out of range");
  CheckResult r = projector_gap(nullptr, c.da.prefix_projector(k), c, s, pol,
                                {{"k", double(k)}});
  if (c.da.tied_at(k)) {
    // Pi_k is basis-dependent inside a tied block; exclude from hard
    // assertions.
    r.verdict = Verdict::Degenerate;
    r.diagnostics["tied_block"] = 1.0;
    r.note = "tied eigenvalues at the prefix boundary";
  }
  return r;
}

CheckResult gap_projector_single(const Matrix& a, const Matrix& b, int i, double s,
                                 const TolerancePolicy& pol) {
  require_hyp(s >= 0.0 && s <= 1.0, "projector: s must lie in [0,1]");
  PairContext c = make_pair_context(a, b, pol);
  require_hyp(i >= 1 && i <= c.da.dim(), "projector: eigenprojection index out of range");
  CheckResult r =
      projector_gap("single eigenprojection diagnostic; the prefix claim does not apply",
                    c.da.eigenprojector(i), c, s, pol,
                    {{"single_eigenprojection", double(i)}});
  return r;
}

CheckResult gap_pinch_lemma(const Matrix& a, const Matrix& b, int k, double s,
                            const TolerancePolicy& pol) {
  require_hyp(s >= 0.0 && s <= 2.0, "pinch: s must lie in [0,2]");
  PairContext c = make_pair_context(a, b, pol);
  require_pd(c.da, pol, "pinch: A must be PD");
  require_hyp(k >= 1 && k <= c.da.dim(), "pinch: k out of range");

  const PinchedFamily pf(c.da, k);
  const PinchedSandwich ps = pinched_sandwich(pf, c.b_h, pol);
  const Matrix pk = c.da.prefix_projector(k);
  const Complex t_pinched =
      trace_product_complex(pk, power_of(ps.decomp, ps.lam, s, pol));
  const Complex t_base = trace_product_complex(pk, power_of(c.ds, c.lam_s, s, pol));

  // Direct orientation on [0,1]; reversed on (1,2].
  const bool direct = s <= 1.0;
  const Complex lhs = direct ? t_pinched : t_base;
  const Complex rhs = direct ? t_base : t_pinched;
  auto diag = trace_diagnostics(lhs, rhs);
  diag["k"] = double(k);
  diag["lambda_k"] = pf.lambda_k();
  ExponentParams prm;
  prm.s = s;
  return make_check_result("pinch", prm, lhs.real(), rhs.real(), pol, std::move(diag));
}

CheckResult operator_jensen_step(const Matrix& a, const Matrix& b, int k, double s,
                                 const TolerancePolicy& pol) {
  require_hyp(s >= 0.0 && s <= 1.0, "jensen_step: s must lie in [0,1]");
  PairContext c = make_pair_context(a, b, pol);
  require_pd(c.da, pol, "jensen_step: A must be PD");
  require_hyp(k >= 1 && k <= c.da.dim(), "jensen_step: k out of range");

  const PinchedFamily pf(c.da, k);
  // R = (A A~_k^{-1})^{1/2} in the shared eigenbasis.
  RealVector rvals(c.da.dim());
  for (int i = 0; i < c.da.dim(); ++i)
    rvals[i] = std::sqrt(c.da.eigenvalues[i] / pf.pinched().eigenvalues[i]);
  const double r_max = rvals.maxCoeff();
  if (!(r_max <= 1.0 + 1e-12))
    throw NonConvergence("jensen_step: R is not a contraction");
  const Matrix r_mat = c.da.apply_values(rvals);

  const PinchedSandwich ps = pinched_sandwich(pf, c.b_h, pol);
  const Matrix x = power_of(c.ds, c.lam_s, s, pol);
  const Matrix y = hermitian_part(r_mat * power_of(ps.decomp, ps.lam, s, pol) * r_mat);
  const SpectralDecomposition dd = decompose(x - y);
  const double lambda_min = dd.eigenvalues.minCoeff();

  // Encode lambda_min against the operator scale so the uniform verdict
  // rule applies relative tolerance at the right magnitude.
  const double scale = std::max(spectrum_power(c.lam_s, s, pol).maxCoeff(),
                                spectrum_power(ps.lam, s, pol).maxCoeff());
  ExponentParams prm;
  prm.s = s;
  std::map<std::string, double> diag{{"k", double(k)},
                                     {"lambda_min", lambda_min},
                                     {"r_max", r_max},
                                     {"scale", scale}};
  return make_check_result("jensen_step", prm, scale, scale + lambda_min, pol,
                           std::move(diag));
}

CheckResult gap_lemma2(const Matrix& a, const Matrix& b, double s, double t,
                       const TolerancePolicy& pol) {
  require_hyp(s >= 0.0 && s <= 1.0, "lemma2: s must lie in [0,1]");
  require_hyp(t <= -s, "lemma2: t must be <= -s");
  PairContext c = make_pair_context(a, b, pol);
  const Matrix at = power_of(c.da, c.lam_a, t, pol);  // SingularPower if A singular
  const Matrix as = power_of(c.da, c.lam_a, s, pol);
  const Matrix bs = power_of(c.db, c.lam_b, s, pol);
  const Matrix ss = power_of(c.ds, c.lam_s, s, pol);
  const Complex lhs = trace_product_complex(at, ss);
  const Complex rhs = trace_product3_complex(at, as, bs);
  ExponentParams prm;
  prm.s = s;
  prm.t = t;
  return make_check_result("lemma2", prm, lhs.real(), rhs.real(), pol,
                           trace_diagnostics(lhs, rhs));
}

CheckResult gap_gt_limit(const Matrix& a, const Matrix& b, int k, double s, double t,
                         double epsilon, const TolerancePolicy& pol) {
  require_hyp(s >= 0.0 && s <= 1.0, "gt_limit: s must lie in [0,1]");
  require_hyp(t <= -s || t == 0.0, "gt_limit: t must be <= -s (or 0)");
  PairContext c = make_pair_context(a, b, pol, /*need_sandwich=*/false);
  require_hyp(k >= 1 && k <= c.da.dim(), "gt_limit: k out of range");
  const double lk = c.da.eigenvalues[k - 1];
  if (!(epsilon > 0.0 && epsilon < lk))
    throw DomainError("gt_limit: epsilon must lie in (0, lambda_k)");

  const PinchedFamily pf(c.da, k, epsilon);
  const SpectralDecomposition& dp = pf.pinched();
  const RealVector lam_p = clipped_psd_spectrum(dp.eigenvalues, pol);
  const ScalarFunction g_t = ScalarFunction::shifted_power(t, lk - epsilon);
  const RealVector w = weight_values_or_hyp(g_t, lam_p, "gt_limit");
  const Matrix weight = dp.apply_values(w);

  const Matrix aps = power_of(dp, lam_p, s, pol);
  const Matrix bs = power_of(c.db, c.lam_b, s, pol);
  const PinchedSandwich ps = pinched_sandwich(pf, c.b_h, pol);
  const Matrix sps = power_of(ps.decomp, ps.lam, s, pol);

  const Complex lhs = trace_product3_complex(weight, aps, bs);
  const Complex rhs = trace_product_complex(weight, sps);
  auto diag = trace_diagnostics(lhs, rhs);
  diag["k"] = double(k);
  diag["epsilon"] = epsilon;
  diag["gt_minus_projector_fro"] = (weight - c.da.prefix_projector(k)).norm();
  ExponentParams prm;
  prm.s = s;
  prm.t = t;
  return make_check_result("gt_limit", prm, lhs.real(), rhs.real(), pol,
                           std::move(diag));
}

CheckResult gap_s2(const ScalarFunction& f, const Matrix& a, const Matrix& b,
                   const TolerancePolicy& pol) {
  return conj1_family_gap("s2", f, a, b, 2.0, pol);
}

CheckResult gap_lemma4(const Matrix& a, const Matrix& b, int k,
                       const TolerancePolicy& pol) {
  PairContext c = make_pair_context(a, b, pol, /*need_sandwich=*/false);
  require_hyp(k >= 1 && k <= c.da.dim(), "lemma4: k out of range");
  const int n = c.da.dim();
  const double lk = c.da.eigenvalues[k - 1];

  const PinchedFamily pf(c.da, k);
  const SpectralDecomposition& dp = pf.pinched();
  const RealVector lam_p = clipped_psd_spectrum(dp.eigenvalues, pol);
  const PinchedSandwich ps = pinched_sandwich(pf, c.b_h, pol);
  const Matrix pk = c.da.prefix_projector(k);

  const Matrix& sp = ps.matrix;  // A~^{1/2} B A~^{1/2}
  const Matrix a2 = dp.apply_values(spectrum_power(lam_p, 2.0, pol));
  const Matrix b2 = power_of(c.db, c.lam_b, 2.0, pol);
  const Complex lhs = trace_product3_complex(pk, sp, sp);
  const Complex rhs = trace_product3_complex(pk, a2, b2);

  // Proof-chain sub-gaps, with X = Pi_k A~ Pi_k and Y = Pi_k B Pi_k:
  //   pinch step:  Tr[X (X - lambda_k Pi_k) B Pi_k^c B] >= 0
  //   power step:  Tr[X^2 Y^2] - Tr[(XY)^2] >= 0
  const Matrix amat = pf.pinched_matrix();
  const Matrix x = hermitian_part(pk * amat * pk);
  const Matrix y = hermitian_part(pk * c.b_h * pk);
  const Matrix pc = Matrix::Identity(n, n) - pk;
  const Matrix bpcb = hermitian_part(c.b_h * pc * c.b_h);
  const double sub_pinch = trace_product3(x, x - lk * pk, bpcb);
  const Matrix xy = x * y;
  const double sub_alt =
      trace_product(hermitian_part(x * x), hermitian_part(y * y)) -
      trace_product(xy, xy);

  auto diag = trace_diagnostics(lhs, rhs);
  diag["k"] = double(k);
  diag["sub_gap_pinch"] = sub_pinch;
  diag["sub_gap_alt"] = sub_alt;
  diag["chain_residual"] = (rhs.real() - lhs.real()) - (sub_pinch + sub_alt);
  ExponentParams prm;
  CheckResult r =
      make_check_result("lemma4", prm, lhs.real(), rhs.real(), pol, std::move(diag));
  // Each sub-gap must clear the same tolerance as the total.
  const double slack = pol.slack(lhs.real(), rhs.real());
  if (r.verdict == Verdict::Holds && (sub_pinch < -slack || sub_alt < -slack))
    r.verdict = Verdict::Violated;
  return r;
}

CheckResult gap_conjecture1(const ScalarFunction& f, const Matrix& a, const Matrix& b,
                            double s, const TolerancePolicy& pol) {
  require_hyp(s > 1.0, "conj1: s must be > 1");
  return conj1_family_gap("conj1", f, a, b, s, pol);
}

CheckResult gap_conjecture2(const Matrix& a, const Matrix& b, double p, double q,
                            double r, const TolerancePolicy& pol) {
  require_hyp(p > 0.0 && p <= q, "conj2: requires 0 < p <= q");
  require_hyp(r >= 0.0, "conj2: requires r >= 0");
  PairContext c = make_pair_context(a, b, pol, /*need_sandwich=*/false);

  const Matrix arq = power_of(c.da, c.lam_a, r + q, pol);
  const Matrix bq = power_of(c.db, c.lam_b, q, pol);
  const Complex big = trace_product_complex(arq, bq);

  const Matrix ap2 = power_of(c.da, c.lam_a, p / 2.0, pol);
  const Matrix bp = power_of(c.db, c.lam_b, p, pol);
  const Matrix g = hermitian_part(ap2 * bp * ap2);
  const SpectralDecomposition dg = decompose(g);
  const Matrix w = power_of(dg, clipped_psd_spectrum(dg.eigenvalues, pol), q / p, pol);
  const Matrix ar = power_of(c.da, c.lam_a, r, pol);
  const Complex small = trace_product_complex(ar, w);

  ExponentParams prm;
  prm.p = p;
  prm.q = q;
  prm.r = r;
  return make_check_result("conj2", prm, small.real(), big.real(), pol,
                           trace_diagnostics(small, big));
}

CheckResult gap_classical(InequalityId id, const Matrix& x, const Matrix& y,
                          const ExponentParams& params, const TolerancePolicy& pol) {
  switch (id) {
    case InequalityId::Gt: {
      const Matrix h = hermitian_part(x);
      const Matrix k = hermitian_part(y);
      if (h.rows() != k.rows() || h.rows() != h.cols())
        throw DimensionMismatch("gt: dimension mismatch");
      const SpectralDecomposition dhk = decompose(h + k);
      const double lhs = dhk.eigenvalues.array().exp().sum();
      const Complex rhs = trace_product_complex(matrix_exp(h), matrix_exp(k));
      return make_check_result("gt", {}, lhs, rhs.real(), pol,
                               {{"rhs_imag", rhs.imag()}});
    }
    case InequalityId::Alt: {
      require_hyp(params.r.has_value() && *params.r >= 0.0,
                  "alt: requires parameter r >= 0");
      const double r = *params.r;
      PairContext c = make_pair_context(x, y, pol);
      const double t_sand = spectrum_power(c.lam_s, r, pol).sum();
      const Matrix ar2 = power_of(c.da, c.lam_a, r / 2.0, pol);
      const Matrix br = power_of(c.db, c.lam_b, r, pol);
      const Complex t_split = trace_product3_complex(ar2, br, ar2);
      // Tr[(A^{1/2} B A^{1/2})^r] <= Tr[A^{r/2} B^r A^{r/2}] for r >= 1,
      // reversed on [0,1].
      const bool direct = r >= 1.0;
      const double lhs = direct ? t_sand : t_split.real();
      const double rhs = direct ? t_split.real() : t_sand;
      ExponentParams prm;
      prm.r = r;
      return make_check_result("alt", prm, lhs, rhs, pol,
                               {{"split_imag", t_split.imag()},
                                {"regime_direct", direct ? 1.0 : 0.0}});
    }
    case InequalityId::Hp93: {
      require_hyp(params.p.has_value() && *params.p > 0.0,
                  "hp93: requires parameter p > 0");
      const double p = *params.p;
      PairContext c = make_pair_context(x, y, pol, /*need_sandwich=*/false);
      const Matrix log_a = matrix_log(c.da, pol);
      const Matrix log_b = matrix_log(c.db, pol);
      const Complex lhs = trace_product_complex(c.a_h, log_a + log_b);
      const Matrix ap2 = power_of(c.da, c.lam_a, p / 2.0, pol);
      const Matrix bp = power_of(c.db, c.lam_b, p, pol);
      const Matrix g = hermitian_part(ap2 * bp * ap2);
      const Complex rhs = trace_product_complex(c.a_h, matrix_log(g, pol));
      ExponentParams prm;
      prm.p = p;
      return make_check_result("hp93", prm, lhs.real(), rhs.real() / p, pol,
                               trace_diagnostics(lhs, rhs));
    }
    case InequalityId::BlpTrace: {
      require_hyp(params.s.has_value() && params.t.has_value(),
                  "blp_trace: requires parameters s and t");
      const double s = *params.s;
      const double t = *params.t;
      require_hyp(s >= 0.0 && s <= 1.0, "blp_trace: s must lie in [0,1]");
      require_hyp(t >= 0.0, "blp_trace: t must be >= 0");
      PairContext c = make_pair_context(x, y, pol);
      const Matrix at = power_of(c.da, c.lam_a, t, pol);
      const Matrix as = power_of(c.da, c.lam_a, s, pol);
      const Matrix bs = power_of(c.db, c.lam_b, s, pol);
      const Matrix ss = power_of(c.ds, c.lam_s, s, pol);
      const Complex lhs = trace_product3_complex(at, as, bs);
      const Complex rhs = trace_product_complex(at, ss);
      ExponentParams prm;
      prm.s = s;
      prm.t = t;
      return make_check_result("blp_trace", prm, lhs.real(), rhs.real(), pol,
                               trace_diagnostics(lhs, rhs));
    }
    default:
      throw DomainError("gap_classical: unsupported inequality id");
  }
}

LogMajorizationReport lm_classical(InequalityId id, const Matrix& x, const Matrix& y,
                                   const ExponentParams& params,
                                   const TolerancePolicy& pol) {
  switch (id) {
    case InequalityId::Alt: {
      require_hyp(params.r.has_value() && *params.r >= 0.0,
                  "alt: requires parameter r >= 0");
      const double r = *params.r;
      PairContext c = make_pair_context(x, y, pol);
      RealVector sand = spectrum_power(c.lam_s, r, pol);
      RealVector split = product_eigenvalues(c.a_h, r, c.b_h, r, pol);
      // (A^{1/2} B A^{1/2})^r majorized by A^{r/2} B^r A^{r/2} for r >= 1;
      // reversed on [0,1].
      if (r >= 1.0) return check_log_majorization(sand, split, pol);
      return check_log_majorization(split, sand, pol);
    }
    case InequalityId::LieTrotter: {
      require_hyp(params.p.has_value() && *params.p > 0.0,
                  "lie_trotter: requires parameter p > 0");
      const double p = *params.p;
      const SpectralDecomposition dh = decompose(x);
      const SpectralDecomposition dk = decompose(y);
      const SpectralDecomposition dhk =
          decompose(hermitian_part(x) + hermitian_part(y));
      RealVector lhs = dhk.eigenvalues.array().exp().matrix();
      const Matrix eh2 = dh.map([&](double v) { return std::exp(p * v / 2.0); });
      const Matrix ek = dk.map([&](double v) { return std::exp(p * v); });
      const SpectralDecomposition dm = decompose(hermitian_part(eh2 * ek * eh2));
      RealVector rhs =
          spectrum_power(clipped_psd_spectrum(dm.eigenvalues, pol), 1.0 / p, pol);
      return check_log_majorization(lhs, rhs, pol);
    }
    case InequalityId::Ah94: {
      require_hyp(params.p.has_value() && *params.p > 0.0,
                  "ah94: requires parameter p > 0");
      require_hyp(params.alpha.has_value() && *params.alpha >= 0.0 &&
                      *params.alpha <= 1.0,
                  "ah94: requires parameter alpha in [0,1]");
      const double p = *params.p;
      const double alpha = *params.alpha;
      const SpectralDecomposition dh = decompose(x);
      const SpectralDecomposition dk = decompose(y);
      const Matrix ekm = dk.map([&](double v) { return std::exp(-p * v / 2.0); });
      const Matrix ekp = dk.map([&](double v) { return std::exp(p * v / 2.0); });
      const Matrix eh = dh.map([&](double v) { return std::exp(p * v); });
      const SpectralDecomposition dg = decompose(hermitian_part(ekm * eh * ekm));
      const Matrix galpha =
          power_of(dg, clipped_psd_spectrum(dg.eigenvalues, pol), alpha, pol);
      const SpectralDecomposition dm = decompose(hermitian_part(ekp * galpha * ekp));
      RealVector lhs =
          spectrum_power(clipped_psd_spectrum(dm.eigenvalues, pol), 1.0 / p, pol);
      const SpectralDecomposition dmix = decompose(
          alpha * hermitian_part(x) + (1.0 - alpha) * hermitian_part(y));
      RealVector rhs = dmix.eigenvalues.array().exp().matrix();
      return check_log_majorization(lhs, rhs, pol);
    }
    case InequalityId::Blp: {
      require_hyp(params.s.has_value() && params.t.has_value(),
                  "blp: requires parameters s and t");
      const double s = *params.s;
      const double t = *params.t;
      require_hyp(s > 0.0 && s <= 1.0, "blp: s must lie in (0,1]");
      require_hyp(t > 0.0, "blp: t must be > 0");
      PairContext c = make_pair_context(x, y, pol);
      RealVector lhs = product_eigenvalues(c.a_h, t + s, c.b_h, s, pol);
      const Matrix at = power_of(c.da, c.lam_a, t, pol);
      const Matrix ss = power_of(c.ds, c.lam_s, s, pol);
      RealVector rhs = product_eigenvalues(at, ss, pol);
      return check_log_majorization(lhs, rhs, pol);
    }
    case InequalityId::Gblp: {
      require_hyp(params.p.has_value() && params.q.has_value() && params.r.has_value(),
                  "gblp: requires parameters p, q, r");
      const double p = *params.p;
      const double q = *params.q;
      const double r = *params.r;
      const bool forward = q > 0.0 && q <= p && r >= 0.0;
      const bool reverse1 = p > 0.0 && r >= 0.0 && r <= p && p <= q;
      const bool reverse2 = q >= 0.0 && q < p && -r >= q;
      require_hyp(forward || reverse1 || reverse2,
                  "gblp: parameters outside every stated region");
      require_hyp(p > 0.0, "gblp: p must be > 0");
      PairContext c = make_pair_context(x, y, pol, /*need_sandwich=*/false);
      RealVector side_a = product_eigenvalues(c.a_h, r + q, c.b_h, q, pol);
      const Matrix ap2 = power_of(c.da, c.lam_a, p / 2.0, pol);
      const Matrix bp = power_of(c.db, c.lam_b, p, pol);
      const SpectralDecomposition dg = decompose(hermitian_part(ap2 * bp * ap2));
      const Matrix w =
          power_of(dg, clipped_psd_spectrum(dg.eigenvalues, pol), q / p, pol);
      const Matrix ar = power_of(c.da, c.lam_a, r, pol);
      RealVector side_b = product_eigenvalues(ar, w, pol);
      // Forward region claims A^{r+q} B^q < A^r (...)^{q/p}; the reverse
      // regions claim the flip.
      if (forward) return check_log_majorization(side_a, side_b, pol);
      return check_log_majorization(side_b, side_a, pol);
    }
    case InequalityId::Ma12: {
      require_hyp(params.s.has_value() && *params.s >= 0.0,
                  "ma12: requires parameter s >= 0");
      const double s = *params.s;
      PairContext c = make_pair_context(x, y, pol, /*need_sandwich=*/false);
      const Matrix am = power_of(c.da, c.lam_a, -0.5, pol);  // SingularPower unless PD
      const SpectralDecomposition dc = decompose(hermitian_part(am * c.b_h * am));
      const Matrix cs =
          power_of(dc, clipped_psd_spectrum(dc.eigenvalues, pol), s, pol);
      RealVector lhs = product_eigenvalues(c.a_h, cs, pol);
      RealVector rhs = product_eigenvalues(c.a_h, 1.0 - s, c.b_h, s, pol);
      // Fixed orientation; the verdict carries the s-regime sign pattern.
      return check_log_majorization(lhs, rhs, pol);
    }
    default:
      throw DomainError("lm_classical: unsupported inequality id");
  }
}

std::array<CheckResult, 3> remark_instance(const TolerancePolicy& pol) {
  Matrix a(2, 2), b(2, 2);
  a << 2.0, 0.0, 0.0, 1.0;
  b << 1.0, 1.0, 1.0, 1.0;
  return {gap_projector_single(a, b, 2, 0.5, pol), gap_projector(a, b, 1, 0.5, pol),
          gap_projector(a, b, 2, 0.5, pol)};
}

}  // namespace araki
