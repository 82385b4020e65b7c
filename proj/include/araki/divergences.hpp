#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "araki/check_result.hpp"
#include "araki/hermitian.hpp"

namespace araki {

// The six quantum divergences, all in nats. The four Renyi kinds take
// alpha in (0,1) or (1,inf); alpha = 1 is served by umegaki and
// belavkin_staszewski instead of a limit evaluation.
enum class DivergenceKind {
  Petz,               // log Tr[rho^a sigma^{1-a}] / (a-1)
  Sandwiched,         // log Tr[(sigma^{(1-a)/2a} rho sigma^{(1-a)/2a})^a] / (a-1)
  LogEuclidean,       // log Tr[exp(a log rho + (1-a) log sigma)] / (a-1)
  Geometric,          // log Tr[rho (rho^{-1/2} sigma rho^{-1/2})^{1-a}] / (a-1)
  Umegaki,            // Tr[rho (log rho - log sigma)]
  BelavkinStaszewski  // Tr[rho log(rho^{1/2} sigma^{-1} rho^{1/2})]
};

std::string_view to_string(DivergenceKind k);
std::optional<DivergenceKind> parse_divergence_kind(std::string_view s);

// Throws DomainError unless the matrix is PSD with unit trace (1e-10).
void require_density(const SpectralDecomposition& d, const TolerancePolicy& pol);

// Divergence value in nats. Support failures surface as SingularLog /
// SingularPower (degenerate input, reported by callers, not asserted).
double divergence(DivergenceKind kind, const Matrix& rho, const Matrix& sigma,
                  std::optional<double> alpha, const TolerancePolicy& pol);

// The ordering chain, one oriented CheckResult per claim:
//   sandwiched <= petz               (alpha > 0)
//   petz <= log_euclidean            (alpha in (0,1))
//   log_euclidean <= geometric       (alpha in (0,1))
//   umegaki <= belavkin_staszewski   (once, alpha-independent)
// Support failures yield Degenerate rows rather than errors.
std::vector<CheckResult> ordering_report(const Matrix& rho, const Matrix& sigma,
                                         const RealVector& alpha_grid,
                                         const TolerancePolicy& pol);

}  // namespace araki
