#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "araki/hermitian.hpp"
#include "araki/rng.hpp"

namespace araki {

// Structured PSD instance families. Every family produces a PSD matrix
// by construction; outputs are a pure function of the spec.
enum class SampleFamily {
  Wishart,            // G G^dagger with i.i.d. standard complex normal G
  Density,            // wishart normalized to unit trace
  CommutingPair,      // shared random eigenbasis, two positive spectra
  NearSingular,       // wishart with lambda_min pinned to 1e-8 * lambda_max
  SpikedDiagonal,     // positive diagonal with one dominant entry
  DegenerateSpectrum  // repeated eigenvalues in a random basis
};

std::string_view to_string(SampleFamily f);
std::optional<SampleFamily> parse_sample_family(std::string_view s);

struct SamplerSpec {
  int dim = 2;
  SampleFamily family = SampleFamily::Wishart;
  std::uint64_t seed = 0;
  double scale = 1.0;
};

// Haar-ish random unitary: QR of a complex Gaussian matrix with the
// R-diagonal phase fixed.
Matrix random_unitary(int dim, Rng& rng);

// One matrix; commuting_pair is pair-valued and rejects this entry point.
Matrix sample(const SamplerSpec& spec);

// A pair (A, B). For commuting_pair both share an eigenbasis; every
// other family draws two independent matrices from derived sub-streams.
std::pair<Matrix, Matrix> sample_pair(const SamplerSpec& spec);

}  // namespace araki
