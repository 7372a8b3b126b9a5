#include "vlm/channel.hpp"

#include <cmath>
#include <numbers>

namespace vlm::channel {

namespace {

ComplexMatrix iid_matrix(int rows, int cols, RngStream& rng) {
  ComplexMatrix G(rows, cols);
  // Column-major fill order is part of the determinism contract.
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) G(r, c) = rng.cnormal();
  return G;
}

}  // namespace

ChannelRealization gen_iid_rayleigh(int M, int K, const StreamKey& key) {
  if (M < 1 || K < 1) fail(Err::RangeViolation, "gen_iid_rayleigh: M, K >= 1 required");
  RngStream rng(key.with_purpose(Draw::SmallScale));
  return {iid_matrix(M, K, rng), ModelTag::IidRayleigh, key};
}

ChannelRealization gen_multiuser_channel(const ChannelRealization& H, const RealVector& beta) {
  if (beta.size() != H.K())
    fail(Err::DimensionMismatch, "gen_multiuser_channel: beta length must equal K");
  for (Eigen::Index k = 0; k < beta.size(); ++k)
    if (!(beta(k) > 0.0)) fail(Err::RangeViolation, "gen_multiuser_channel: beta must be > 0");
  ChannelRealization out = H;
  out.G = H.G * beta.cwiseSqrt().asDiagonal();
  out.model_tag = ModelTag::MultiUser;
  return out;
}

LargeScaleProfile gen_large_scale(const DistanceGrid& distances, double sigma_shadow_dB,
                                  double exponent, const StreamKey& key, double min_distance) {
  LargeScaleProfile p;
  p.cells = distances.cells;
  p.terminals = distances.terminals;
  p.exponent = exponent;
  p.sigma_shadow_dB = sigma_shadow_dB;
  const size_t n = distances.r.size();
  p.beta.resize(n);
  p.shadow.resize(n);
  p.dist = distances.r;
  RngStream rng(key.with_purpose(Draw::Shadow));
  for (size_t i = 0; i < n; ++i) {
    const double r = distances.r[i];
    if (r < min_distance)
      fail(Err::UserTooClose, "gen_large_scale: distance " + std::to_string(r) +
                                  " below minimum " + std::to_string(min_distance));
    const double z = std::pow(10.0, sigma_shadow_dB * rng.normal() / 10.0);
    p.shadow[i] = z;
    p.beta[i] = z / std::pow(r, exponent);
  }
  return p;
}

CorrelationSpec CorrelationSpec::uniform_aps_ula(int M, int K, double rx_spacing_wavelengths,
                                                 double tx_spacing_wavelengths) {
  CorrelationSpec spec;
  auto build = [](int n, double d) {
    ComplexMatrix psi = ComplexMatrix::Identity(n, n);
    if (d > 0.0) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          psi(a, b) = numerics::bessel_j0(2.0 * std::numbers::pi * d * std::abs(a - b));
    } else if (d == 0.0) {
      psi.setOnes();  // colocated elements: J0(0) = 1 everywhere, rank one
    }
    return psi;
  };
  spec.psi_r = build(M, rx_spacing_wavelengths);
  spec.psi_t = tx_spacing_wavelengths > 0.0 ? build(K, tx_spacing_wavelengths)
                                            : ComplexMatrix::Identity(K, K);
  return spec;
}

ChannelRealization correlated_channel(int M, int K, const CorrelationSpec& spec,
                                      const StreamKey& key) {
  if (spec.psi_r.rows() != M || spec.psi_r.cols() != M)
    fail(Err::DimensionMismatch, "correlated_channel: psi_r must be M x M");
  if (spec.psi_t.rows() != K || spec.psi_t.cols() != K)
    fail(Err::DimensionMismatch, "correlated_channel: psi_t must be K x K");
  const ComplexMatrix sr = numerics::hermitian_sqrt_psd(spec.psi_r);
  const ComplexMatrix st = numerics::hermitian_sqrt_psd(spec.psi_t);
  ChannelRealization iid = gen_iid_rayleigh(M, K, key);
  ChannelRealization out;
  out.G = sr * iid.G * st;
  out.model_tag = ModelTag::Correlated;
  out.seed_path = key;
  return out;
}

CouplingSpec CouplingSpec::dipole_ula3(double spacing_wavelengths) {
  using namespace std::complex_literals;
  CouplingSpec c;
  ComplexMatrix Z(3, 3);
  if (spacing_wavelengths == 0.05) {
    Z << 72.9 + 42.4i, 71.4 + 24.3i, 67.1 + 7.6i,
         71.4 + 24.3i, 72.9 + 42.4i, 71.4 + 24.3i,
         67.1 + 7.6i,  71.4 + 24.3i, 72.9 + 42.4i;
  } else if (spacing_wavelengths == 0.5) {
    Z << 72.9 + 42.4i, -12.5 - 29.8i, 4.0 + 17.7i,
         -12.5 - 29.8i, 72.9 + 42.4i, -12.5 - 29.8i,
         4.0 + 17.7i,  -12.5 - 29.8i, 72.9 + 42.4i;
  } else {
    fail(Err::RangeViolation, "dipole_ula3: tabulated spacings are 0.05 and 0.5 wavelengths");
  }
  const cplx z11 = Z(0, 0);
  c.Z_r = Z;
  c.Z_t = z11 * ComplexMatrix::Identity(3, 3);  // uncoupled transmit side
  c.Z_l = std::conj(z11) * ComplexMatrix::Identity(3, 3);
  c.r11 = z11.real();
  return c;
}

ChannelRealization coupled_channel(const ChannelRealization& G, const CouplingSpec& cpl) {
  const int M = G.M();
  const int K = G.K();
  if (cpl.Z_r.rows() != M || cpl.Z_r.cols() != M || cpl.Z_l.rows() != M || cpl.Z_l.cols() != M)
    fail(Err::DimensionMismatch, "coupled_channel: Z_r / Z_l must match M");
  if (cpl.Z_t.rows() != K || cpl.Z_t.cols() != K)
    fail(Err::DimensionMismatch, "coupled_channel: Z_t must match K");
  for (int i = 0; i < M; ++i)
    if (!(cpl.Z_r(i, i).real() > 0.0))
      fail(Err::RangeViolation, "coupled_channel: Re{z_ii} must be positive");

  const ComplexMatrix sum = cpl.Z_l + cpl.Z_r;
  Eigen::FullPivLU<ComplexMatrix> lu(sum);
  if (!lu.isInvertible()) fail(Err::SingularImpedanceSum, "coupled_channel: Z_l + Z_r singular");

  const ComplexMatrix R_l_half = numerics::hermitian_sqrt_psd(cpl.Z_l.real().cast<cplx>());
  // R_t is diagonal for autonomous terminals but handle the general PSD case.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(cpl.Z_t.real().cast<cplx>());
  RealVector lam = es.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (!(lam(i) > 0.0)) fail(Err::NotPsd, "coupled_channel: R_t must be positive definite");
    lam(i) = 1.0 / std::sqrt(lam(i));
  }
  const ComplexMatrix R_t_invhalf = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();

  ChannelRealization out;
  out.G = 2.0 * cpl.r11 * R_l_half * lu.solve(G.G) * R_t_invhalf;
  out.model_tag = ModelTag::Coupled;
  out.seed_path = G.seed_path;
  return out;
}

ScattererField ScattererField::sample(int M, const StreamKey& key, int scatterer_count,
                                      double square_side, double standoff,
                                      double element_spacing, double amp_exponent) {
  ScattererField f;
  f.array_elements = M;
  f.element_spacing = element_spacing;
  f.standoff = standoff;
  f.square_side = square_side;
  f.amp_exponent = amp_exponent;
  f.scatterers.resize(2, scatterer_count);
  RngStream pos_rng(key.with_purpose(Draw::Scatterer));
  for (int s = 0; s < scatterer_count; ++s) {
    f.scatterers(0, s) = pos_rng.uniform(-square_side / 2.0, square_side / 2.0);
    f.scatterers(1, s) = pos_rng.uniform(0.0, square_side);
  }
  RngStream refl_rng(key.with_purpose(Draw::Reflection));
  f.reflections.resize(scatterer_count);
  for (int s = 0; s < scatterer_count; ++s) f.reflections(s) = refl_rng.cnormal();
  return f;
}

Eigen::Vector2d ScattererField::element_position(int m) const {
  const double x = (m - (array_elements - 1) / 2.0) * element_spacing;
  return {x, -standoff};
}

ComplexVector geometric_gains(const ScattererField& field, const Eigen::Vector2d& point) {
  const int M = field.array_elements;
  const int S = static_cast<int>(field.scatterers.cols());
  ComplexVector g = ComplexVector::Zero(M);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (int s = 0; s < S; ++s) {
    const Eigen::Vector2d sc = field.scatterers.col(s);
    const double d2 = (point - sc).norm();
    if (d2 < 0.1) fail(Err::DegenerateGeometry, "geometric_gains: scatterer-to-point leg < lambda/10");
    for (int m = 0; m < M; ++m) {
      const double d1 = (field.element_position(m) - sc).norm();
      if (d1 < 0.1) fail(Err::DegenerateGeometry, "geometric_gains: array-to-scatterer leg < lambda/10");
      const double total = d1 + d2;
      const double amp = 1.0 / std::pow(d1 * d2, field.amp_exponent);
      g(m) += field.reflections(s) * std::polar(amp, -two_pi * total);
    }
  }
  return g;
}

ChannelRealization imperfect_csi(const ChannelRealization& G, double xi, const StreamKey& key) {
  if (!(xi >= 0.0 && xi <= 1.0)) fail(Err::RangeViolation, "imperfect_csi: xi must be in [0, 1]");
  ChannelRealization out;
  out.seed_path = key;
  out.model_tag = ModelTag::ImperfectCsi;
  if (xi == 1.0) {
    out.G = G.G;
    return out;
  }
  RngStream rng(key.with_purpose(Draw::CsiError));
  out.G = xi * G.G + std::sqrt(1.0 - xi * xi) * iid_matrix(G.M(), G.K(), rng);
  return out;
}

}  // namespace vlm::channel
