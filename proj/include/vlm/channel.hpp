#pragma once

#include <vector>

#include "vlm/numerics.hpp"
#include "vlm/rng.hpp"

namespace vlm::channel {

enum class ModelTag {
  IidRayleigh,
  MultiUser,
  Correlated,
  Coupled,
  Geometric,
  ImperfectCsi,
};

// One draw of the propagation matrix. Rows are base-station antennas (M),
// columns are terminals (K).
struct ChannelRealization {
  ComplexMatrix G;
  ModelTag model_tag = ModelTag::IidRayleigh;
  StreamKey seed_path;

  int M() const { return static_cast<int>(G.rows()); }
  int K() const { return static_cast<int>(G.cols()); }
};

// IID CN(0,1) small-scale fading; deterministic per stream key.
ChannelRealization gen_iid_rayleigh(int M, int K, const StreamKey& key);

// G = H * diag(beta)^{1/2}: column k of H scaled by sqrt(beta_k).
ChannelRealization gen_multiuser_channel(const ChannelRealization& H, const RealVector& beta);

// Distances feeding the large-scale model: r(k, j, l) is the distance from
// terminal l of cell k to base station j, already wrap-corrected by whoever
// built the geometry.
struct DistanceGrid {
  int cells = 0;
  int terminals = 0;
  std::vector<double> r;  // cells * cells * terminals, index (k, j, l)

  double& at(int k, int j, int l) { return r[(static_cast<size_t>(k) * cells + j) * terminals + l]; }
  double at(int k, int j, int l) const { return r[(static_cast<size_t>(k) * cells + j) * terminals + l]; }
};

// beta = z / r^exponent with 10 log10(z) ~ N(0, sigma_shadow^2), IID per link.
struct LargeScaleProfile {
  int cells = 0;
  int terminals = 0;
  double exponent = 3.8;
  double sigma_shadow_dB = 8.0;
  std::vector<double> beta;    // (k, j, l) layout as DistanceGrid
  std::vector<double> shadow;  // z
  std::vector<double> dist;    // r, meters

  double b(int k, int j, int l) const { return beta[(static_cast<size_t>(k) * cells + j) * terminals + l]; }
  double z(int k, int j, int l) const { return shadow[(static_cast<size_t>(k) * cells + j) * terminals + l]; }
  double d(int k, int j, int l) const { return dist[(static_cast<size_t>(k) * cells + j) * terminals + l]; }
};

LargeScaleProfile gen_large_scale(const DistanceGrid& distances, double sigma_shadow_dB,
                                  double exponent, const StreamKey& key,
                                  double min_distance = 0.0);

// Kronecker correlation. Psi matrices are Hermitian PSD with unit diagonal.
struct CorrelationSpec {
  ComplexMatrix psi_r;  // M x M receive correlation
  ComplexMatrix psi_t;  // K x K transmit correlation

  // Uniform 2D angular power spectrum over a ULA: Psi(m, n) = J0(2 pi d |m-n|).
  static CorrelationSpec uniform_aps_ula(int M, int K, double rx_spacing_wavelengths,
                                         double tx_spacing_wavelengths = 0.0);
};

// G = Psi_r^{1/2} G_iid Psi_t^{1/2}.
ChannelRealization correlated_channel(int M, int K, const CorrelationSpec& spec,
                                      const StreamKey& key);

// Impedance description of a mutually coupled receive array.
struct CouplingSpec {
  ComplexMatrix Z_r;  // receive-array impedance, ohms
  ComplexMatrix Z_t;  // transmit-side impedance (diagonal for autonomous terminals)
  ComplexMatrix Z_l;  // load impedances
  double r11 = 0.0;   // self-resistance of the isolated element, ohms

  // Printed 3x3 impedance matrices for a ULA of parallel half-wave dipoles at
  // 0.05 or 0.5 wavelength spacing; loads default to the per-port conjugate
  // match conj(z11) * I.
  static CouplingSpec dipole_ula3(double spacing_wavelengths);
};

// G_mc = 2 r11 R_l^{1/2} (Z_l + Z_r)^{-1} G R_t^{-1/2},
// R_l = Re{Z_l}, R_t = Re{Z_t}.
ChannelRealization coupled_channel(const ChannelRealization& G, const CouplingSpec& cpl);

// Frozen single-scattering geometry: S scatterers uniform in a square of
// square_side wavelengths, reflection coefficients CN(0,1), M-element ULA at
// standoff wavelengths from the near edge, broadside through the center.
struct ScattererField {
  Eigen::Matrix2Xd scatterers;   // positions, wavelengths
  ComplexVector reflections;     // a_s
  int array_elements = 0;        // M
  double element_spacing = 0.5;  // wavelengths
  double standoff = 1600.0;
  double square_side = 800.0;
  double amp_exponent = 1.0;     // per-leg amplitude exponent

  static ScattererField sample(int M, const StreamKey& key, int scatterer_count = 400,
                               double square_side = 800.0, double standoff = 1600.0,
                               double element_spacing = 0.5, double amp_exponent = 1.0);

  Eigen::Vector2d center() const { return {0.0, square_side / 2.0}; }
  Eigen::Vector2d element_position(int m) const;
};

// g_m = sum_s a_s exp(-j 2 pi (d_ms + d_sp)) / (d_ms * d_sp)^amp_exponent.
ComplexVector geometric_gains(const ScattererField& field, const Eigen::Vector2d& point);

// G_hat = xi G + sqrt(1 - xi^2) E with E IID CN(0,1).
ChannelRealization imperfect_csi(const ChannelRealization& G, double xi, const StreamKey& key);

}  // namespace vlm::channel
