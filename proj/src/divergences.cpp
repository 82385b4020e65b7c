#include "araki/divergences.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace araki {

namespace {

constexpr std::array<std::pair<DivergenceKind, std::string_view>, 6> kKindNames{{
    {DivergenceKind::Petz, "petz"},
    {DivergenceKind::Sandwiched, "sandwiched"},
    {DivergenceKind::LogEuclidean, "log_euclidean"},
    {DivergenceKind::Geometric, "geometric"},
    {DivergenceKind::Umegaki, "umegaki"},
    {DivergenceKind::BelavkinStaszewski, "belavkin_staszewski"},
}};

struct DensityPair {
  SpectralDecomposition drho, dsigma;
  RealVector lam_rho, lam_sigma;  // clipped
  Matrix rho_h, sigma_h;
};

DensityPair make_density_pair(const Matrix& rho, const Matrix& sigma,
                              const TolerancePolicy& pol) {
  if (rho.rows() != rho.cols() || sigma.rows() != sigma.cols() ||
      rho.rows() != sigma.rows())
    throw DimensionMismatch("divergence: operands must be square of equal dim");
  DensityPair d;
  d.rho_h = hermitian_part(rho);
  d.sigma_h = hermitian_part(sigma);
  d.drho = decompose(d.rho_h);
  d.dsigma = decompose(d.sigma_h);
  require_density(d.drho, pol);
  require_density(d.dsigma, pol);
  d.lam_rho = clipped_psd_spectrum(d.drho.eigenvalues, pol);
  d.lam_sigma = clipped_psd_spectrum(d.dsigma.eigenvalues, pol);
  return d;
}

double log_trace_or_throw(double trace_value, const char* who) {
  if (!(trace_value > 0.0))
    throw DomainError(std::string(who) + ": trace argument is not positive");
  return std::log(trace_value);
}

double renyi_prefactor(double alpha) { return 1.0 / (alpha - 1.0); }

void require_renyi_alpha(std::optional<double> alpha, const char* who) {
  if (!alpha.has_value())
    throw DomainError(std::string(who) + ": alpha is required");
  if (!(*alpha > 0.0) || *alpha == 1.0)
    throw DomainError(std::string(who) +
                      ": alpha must lie in (0,1) or (1,inf); alpha = 1 is served "
                      "by umegaki / belavkin_staszewski");
}

double petz_value(const DensityPair& d, double alpha, const TolerancePolicy& pol) {
  const Matrix ra = d.drho.apply_values(spectrum_power(d.lam_rho, alpha, pol));
  const Matrix sb =
      d.dsigma.apply_values(spectrum_power(d.lam_sigma, 1.0 - alpha, pol));
  return renyi_prefactor(alpha) *
         log_trace_or_throw(trace_product(ra, sb), "petz");
}

double sandwiched_value(const DensityPair& d, double alpha,
                        const TolerancePolicy& pol) {
  const double e = (1.0 - alpha) / (2.0 * alpha);
  const Matrix se = d.dsigma.apply_values(spectrum_power(d.lam_sigma, e, pol));
  const SpectralDecomposition dm = decompose(hermitian_part(se * d.rho_h * se));
  const double t =
      spectrum_power(clipped_psd_spectrum(dm.eigenvalues, pol), alpha, pol).sum();
  return renyi_prefactor(alpha) * log_trace_or_throw(t, "sandwiched");
}

double log_euclidean_value(const DensityPair& d, double alpha,
                           const TolerancePolicy& pol) {
  const Matrix log_rho = matrix_log(d.drho, pol);
  const Matrix log_sigma = matrix_log(d.dsigma, pol);
  const Matrix mix = alpha * log_rho + (1.0 - alpha) * log_sigma;
  const SpectralDecomposition dm = decompose(mix);
  const double t = dm.eigenvalues.array().exp().sum();
  return renyi_prefactor(alpha) * log_trace_or_throw(t, "log_euclidean");
}

double geometric_value(const DensityPair& d, double alpha,
                       const TolerancePolicy& pol) {
  const Matrix rm = d.drho.apply_values(spectrum_power(d.lam_rho, -0.5, pol));
  const SpectralDecomposition dc = decompose(hermitian_part(rm * d.sigma_h * rm));
  const Matrix cpow = dc.apply_values(
      spectrum_power(clipped_psd_spectrum(dc.eigenvalues, pol), 1.0 - alpha, pol));
  return renyi_prefactor(alpha) *
         log_trace_or_throw(trace_product(d.rho_h, cpow), "geometric");
}

double umegaki_value(const DensityPair& d, const TolerancePolicy& pol) {
  const Matrix log_rho = matrix_log(d.drho, pol);
  const Matrix log_sigma = matrix_log(d.dsigma, pol);
  return trace_product(d.rho_h, log_rho - log_sigma);
}

double belavkin_staszewski_value(const DensityPair& d, const TolerancePolicy& pol) {
  const Matrix rh = d.drho.apply_values(spectrum_power(d.lam_rho, 0.5, pol));
  const Matrix si =
      d.dsigma.apply_values(spectrum_power(d.lam_sigma, -1.0, pol));
  const Matrix inner = hermitian_part(rh * si * rh);
  return trace_product(d.rho_h, matrix_log(inner, pol));
}

double dispatch(DivergenceKind kind, const DensityPair& d,
                std::optional<double> alpha, const TolerancePolicy& pol) {
  switch (kind) {
    case DivergenceKind::Petz:
      require_renyi_alpha(alpha, "petz");
      return petz_value(d, *alpha, pol);
    case DivergenceKind::Sandwiched:
      require_renyi_alpha(alpha, "sandwiched");
      return sandwiched_value(d, *alpha, pol);
    case DivergenceKind::LogEuclidean:
      require_renyi_alpha(alpha, "log_euclidean");
      return log_euclidean_value(d, *alpha, pol);
    case DivergenceKind::Geometric:
      require_renyi_alpha(alpha, "geometric");
      return geometric_value(d, *alpha, pol);
    case DivergenceKind::Umegaki:
      return umegaki_value(d, pol);
    case DivergenceKind::BelavkinStaszewski:
      return belavkin_staszewski_value(d, pol);
  }
  throw DomainError("divergence: unknown kind");
}

}  // namespace

std::string_view to_string(DivergenceKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

std::optional<DivergenceKind> parse_divergence_kind(std::string_view s) {
  for (const auto& [kind, name] : kKindNames)
    if (name == s) return kind;
  return std::nullopt;
}

void require_density(const SpectralDecomposition& d, const TolerancePolicy& pol) {
  if (classify_psd(d.eigenvalues, pol) == Definiteness::NotPsd)
    throw DomainError("density matrix must be PSD");
  const double tr = d.eigenvalues.sum();
  if (std::abs(tr - 1.0) > 1e-10)
    throw DomainError("density matrix must have unit trace");
}

double divergence(DivergenceKind kind, const Matrix& rho, const Matrix& sigma,
                  std::optional<double> alpha, const TolerancePolicy& pol) {
  const DensityPair d = make_density_pair(rho, sigma, pol);
  return dispatch(kind, d, alpha, pol);
}

std::vector<CheckResult> ordering_report(const Matrix& rho, const Matrix& sigma,
                                         const RealVector& alpha_grid,
                                         const TolerancePolicy& pol) {
  const DensityPair d = make_density_pair(rho, sigma, pol);
  std::vector<CheckResult> out;

  auto guarded = [&](const char* id, double alpha, auto&& lhs_fn, auto&& rhs_fn) {
    ExponentParams prm;
    prm.alpha = alpha;
    try {
      const double lhs = lhs_fn();
      const double rhs = rhs_fn();
      out.push_back(make_check_result(id, prm, lhs, rhs, pol));
    } catch (const Error& e) {
      out.push_back(make_degenerate_result(id, prm, e.what()));
    }
  };

  for (Eigen::Index i = 0; i < alpha_grid.size(); ++i) {
    const double alpha = alpha_grid[i];
    if (!(alpha > 0.0) || alpha == 1.0) continue;
    guarded(
        "sandwiched_le_petz", alpha, [&] { return sandwiched_value(d, alpha, pol); },
        [&] { return petz_value(d, alpha, pol); });
    if (alpha < 1.0) {
      guarded(
          "petz_le_log_euclidean", alpha, [&] { return petz_value(d, alpha, pol); },
          [&] { return log_euclidean_value(d, alpha, pol); });
      guarded(
          "log_euclidean_le_geometric", alpha,
          [&] { return log_euclidean_value(d, alpha, pol); },
          [&] { return geometric_value(d, alpha, pol); });
    }
  }

  {
    ExponentParams prm;
    try {
      const double lhs = umegaki_value(d, pol);
      const double rhs = belavkin_staszewski_value(d, pol);
      out.push_back(
          make_check_result("umegaki_le_belavkin_staszewski", prm, lhs, rhs, pol));
    } catch (const Error& e) {
      out.push_back(
          make_degenerate_result("umegaki_le_belavkin_staszewski", prm, e.what()));
    }
  }
  return out;
}

}  // namespace araki
