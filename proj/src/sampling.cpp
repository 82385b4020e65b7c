#include "araki/sampling.hpp"

#include <array>

namespace araki {

namespace {

constexpr std::array<std::pair<SampleFamily, std::string_view>, 6> kFamilyNames{{
    {SampleFamily::Wishart, "wishart"},
    {SampleFamily::Density, "density"},
    {SampleFamily::CommutingPair, "commuting_pair"},
    {SampleFamily::NearSingular, "near_singular"},
    {SampleFamily::SpikedDiagonal, "spiked_diagonal"},
    {SampleFamily::DegenerateSpectrum, "degenerate_spectrum"},
}};

Matrix gaussian_matrix(int dim, Rng& rng) {
  Matrix g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) g(i, j) = rng.complex_normal();
  return g;
}

Matrix wishart(int dim, double scale, Rng& rng) {
  const Matrix g = gaussian_matrix(dim, rng);
  return hermitian_part(scale * (g * g.adjoint()));
}

Matrix near_singular(int dim, double scale, Rng& rng) {
  SpectralDecomposition d = decompose(wishart(dim, scale, rng));
  if (dim > 1) d.eigenvalues[dim - 1] = 1e-8 * d.eigenvalues[0];
  return d.reconstruct();
}

Matrix spiked_diagonal(int dim, double scale, Rng& rng) {
  RealVector diag(dim);
  for (int i = 0; i < dim; ++i) diag[i] = scale * rng.uniform(0.1, 1.0);
  const auto spike = static_cast<int>(rng.uniform_int(dim));
  diag[spike] = scale * rng.uniform(5.0, 15.0);
  Matrix m = Matrix::Zero(dim, dim);
  m.diagonal() = diag.cast<Complex>();
  return m;
}

RealVector positive_spectrum(int dim, double scale, Rng& rng) {
  RealVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = scale * rng.uniform(0.2, 2.0);
  return v;
}

Matrix degenerate_spectrum(int dim, double scale, Rng& rng) {
  // at most dim - 1 distinct values forces at least one repeat
  const int distinct = dim > 1 ? 1 + static_cast<int>(rng.uniform_int(dim - 1)) : 1;
  RealVector values(distinct);
  for (int i = 0; i < distinct; ++i) values[i] = scale * rng.uniform(0.5, 2.0);
  RealVector spectrum(dim);
  for (int i = 0; i < dim; ++i)
    spectrum[i] = values[static_cast<int>(rng.uniform_int(distinct))];
  const Matrix u = random_unitary(dim, rng);
  return hermitian_part(u * spectrum.asDiagonal().toDenseMatrix().cast<Complex>() *
                        u.adjoint());
}

}  // namespace

std::string_view to_string(SampleFamily f) {
  for (const auto& [k, v] : kFamilyNames)
    if (k == f) return v;
  return "?";
}

std::optional<SampleFamily> parse_sample_family(std::string_view s) {
  for (const auto& [k, v] : kFamilyNames)
    if (v == s) return k;
  return std::nullopt;
}

Matrix random_unitary(int dim, Rng& rng) {
  const Matrix g = gaussian_matrix(dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex rii = r(i, i);
    const double mag = std::abs(rii);
    if (mag > 0.0) q.col(i) *= rii / mag;
  }
  return q;
}

Matrix sample(const SamplerSpec& spec) {
  if (spec.dim < 1) throw DomainError("sample: dim must be >= 1");
  if (!(spec.scale > 0.0)) throw DomainError("sample: scale must be > 0");
  Rng rng(spec.seed);
  switch (spec.family) {
    case SampleFamily::Wishart:
      return wishart(spec.dim, spec.scale, rng);
    case SampleFamily::Density: {
      Matrix w = wishart(spec.dim, spec.scale, rng);
      return Matrix(w / w.trace().real());
    }
    case SampleFamily::NearSingular:
      return near_singular(spec.dim, spec.scale, rng);
    case SampleFamily::SpikedDiagonal:
      return spiked_diagonal(spec.dim, spec.scale, rng);
    case SampleFamily::DegenerateSpectrum:
      return degenerate_spectrum(spec.dim, spec.scale, rng);
    case SampleFamily::CommutingPair:
      throw DomainError("sample: commuting_pair is pair-valued; use sample_pair");
  }
  throw DomainError("sample: unknown family");
}

std::pair<Matrix, Matrix> sample_pair(const SamplerSpec& spec) {
  if (spec.family == SampleFamily::CommutingPair) {
    if (spec.dim < 1) throw DomainError("sample_pair: dim must be >= 1");
    if (!(spec.scale > 0.0)) throw DomainError("sample_pair: scale must be > 0");
    Rng rng(spec.seed);
    const Matrix u = random_unitary(spec.dim, rng);
    const RealVector da = positive_spectrum(spec.dim, spec.scale, rng);
    const RealVector db = positive_spectrum(spec.dim, spec.scale, rng);
    const Matrix a = hermitian_part(
        u * da.asDiagonal().toDenseMatrix().cast<Complex>() * u.adjoint());
    const Matrix b = hermitian_part(
        u * db.asDiagonal().toDenseMatrix().cast<Complex>() * u.adjoint());
    return {a, b};
  }
  SamplerSpec sa = spec;
  SamplerSpec sb = spec;
  sa.seed = derive_seed(spec.seed, 0);
  sb.seed = derive_seed(spec.seed, 1);
  return {sample(sa), sample(sb)};
}

}  // namespace araki
