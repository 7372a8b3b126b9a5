#pragma once

#include <Eigen/Dense>
#include <complex>

#include "vlm/error.hpp"

namespace vlm {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using cplx = std::complex<double>;

namespace numerics {

struct PinvOptions {
  double rtol = 1e-12;  // singular values below rtol * sigma_max count as zero
};

// Moore-Penrose pseudo-inverse. Well-conditioned full-rank inputs go through
// a one-sided Gram solve with Cholesky; anything near the rank tolerance
// falls back to an SVD. Singular values that are exactly zero are truncated;
// values in (0, rtol*sigma_max) raise RankDeficient because the rank is
// numerically ambiguous.
ComplexMatrix pseudo_inverse(const ComplexMatrix& A, const PinvOptions& opts = {});

// Ascending real eigenvalues of a Hermitian matrix. Relative Hermiticity
// tolerance 1e-10.
RealVector eigvals_hermitian(const ComplexMatrix& Z);

// V * sqrt(diag) * V^H of a Hermitian PSD matrix; eigenvalues in
// [-neg_tol, 0) are clamped to zero, anything below raises NotPSD.
ComplexMatrix hermitian_sqrt_psd(const ComplexMatrix& A, double neg_tol = 1e-8);

enum class NeumannWeighting { FixedMplusK, TraceNormalized };

struct NeumannConfig {
  int terms = 4;             // L: series truncated after (I - wZ)^L
  double attenuation = 1.0;  // delta in (0, 1]
  NeumannWeighting weighting = NeumannWeighting::FixedMplusK;
  double trace_c = 0.0;      // c of the c/Tr(Z) weighting; 0 means c = K
  int term_cap = 200;
};

// delta = 1 when the array is comfortably oversized, 0.9 otherwise.
double default_neumann_attenuation(double alpha);

// Truncated Neumann-series approximation of Z^{-1} for a K x K Gram matrix
// built from an M x K (or K x M) channel:
//   Z^{-1} ~ (delta/w) * sum_{n=0}^{L} (I - (delta/w) Z)^n
// with w = M + K or Tr(Z)/c. Requires alpha = M/K > 1.
ComplexMatrix neumann_inverse(const ComplexMatrix& Z, const NeumannConfig& cfg, int M, int K);

// Bessel function of the first kind, order zero; |error| <= 1e-10 on |x| <= 100.
double bessel_j0(double x);

// log2 det(I + scale * A) for Hermitian PSD A, via eigenvalues.
double log2_det_i_plus(const ComplexMatrix& A, double scale);

}  // namespace numerics
}  // namespace vlm
