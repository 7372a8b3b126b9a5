#include "vlm/numerics.hpp"

#include <cmath>

namespace vlm::numerics {

namespace {

void require_finite(const ComplexMatrix& A, const char* who) {
  if (!A.allFinite()) fail(Err::NonFinite, std::string(who) + ": non-finite entries");
}

ComplexMatrix svd_pinv(const ComplexMatrix& A, double rtol) {
  Eigen::JacobiSVD<ComplexMatrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  const double cutoff = rtol * smax;
  RealVector inv = RealVector::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cutoff) {
      inv(i) = 1.0 / s(i);
    } else if (s(i) > 0.0) {
      fail(Err::RankDeficient, "pseudo_inverse: singular value " + std::to_string(s(i)) +
                                   " below rtol * sigma_max = " + std::to_string(cutoff));
    }
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

}  // namespace

ComplexMatrix pseudo_inverse(const ComplexMatrix& A, const PinvOptions& opts) {
  require_finite(A, "pseudo_inverse");
  const bool tall = A.rows() >= A.cols();
  const ComplexMatrix gram = tall ? ComplexMatrix(A.adjoint() * A) : ComplexMatrix(A * A.adjoint());
  Eigen::LLT<ComplexMatrix> llt(gram);
  if (llt.info() == Eigen::Success && llt.rcond() > 1e-10) {
    if (tall) return llt.solve(A.adjoint());
    return llt.solve(A).adjoint();  // A^H (A A^H)^{-1}
  }
  return svd_pinv(A, opts.rtol);
}

RealVector eigvals_hermitian(const ComplexMatrix& Z) {
  require_finite(Z, "eigvals_hermitian");
  if (Z.rows() != Z.cols()) fail(Err::DimensionMismatch, "eigvals_hermitian: square matrix required");
  const double scale = Z.norm();
  if ((Z - Z.adjoint()).norm() > 1e-10 * std::max(scale, 1e-300))
    fail(Err::NotHermitian, "eigvals_hermitian: relative asymmetry above 1e-10");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(Z, Eigen::EigenvaluesOnly);
  return es.eigenvalues();  // ascending
}

ComplexMatrix hermitian_sqrt_psd(const ComplexMatrix& A, double neg_tol) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(A);
  RealVector lam = es.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < -neg_tol)
      fail(Err::NotPsd, "hermitian_sqrt_psd: eigenvalue " + std::to_string(lam(i)));
    lam(i) = lam(i) > 0.0 ? std::sqrt(lam(i)) : 0.0;
  }
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

double default_neumann_attenuation(double alpha) { return alpha >= 4.0 ? 1.0 : 0.9; }

ComplexMatrix neumann_inverse(const ComplexMatrix& Z, const NeumannConfig& cfg, int M, int K) {
  require_finite(Z, "neumann_inverse");
  if (Z.rows() != K || Z.cols() != K)
    fail(Err::DimensionMismatch, "neumann_inverse: Z must be K x K");
  if (K <= 0 || M <= K)
    fail(Err::AlphaTooSmall, "neumann_inverse: requires alpha = M/K > 1");
  if (!(cfg.attenuation > 0.0 && cfg.attenuation <= 1.0))
    fail(Err::RangeViolation, "neumann_inverse: attenuation must be in (0, 1]");
  const int terms = std::min(cfg.terms, cfg.term_cap);
  if (terms < 0) fail(Err::RangeViolation, "neumann_inverse: terms must be >= 0");

  double w;
  if (cfg.weighting == NeumannWeighting::FixedMplusK) {
    w = static_cast<double>(M + K);
  } else {
    const double c = cfg.trace_c > 0.0 ? cfg.trace_c : static_cast<double>(K);
    w = Z.real().trace() / c;
  }
  const double scale = cfg.attenuation / w;

  const ComplexMatrix T = ComplexMatrix::Identity(K, K) - scale * Z;
  ComplexMatrix sum = ComplexMatrix::Identity(K, K);
  ComplexMatrix power = ComplexMatrix::Identity(K, K);
  double prev_norm = power.norm();
  int growth_streak = 0;
  for (int n = 1; n <= terms; ++n) {
    power = T * power;
    const double norm = power.norm();
    growth_streak = norm > prev_norm ? growth_streak + 1 : 0;
    if (growth_streak >= 3)
      fail(Err::DivergenceDetected, "neumann_inverse: term norm grew for 3 consecutive orders");
    prev_norm = norm;
    sum += power;
  }
  return scale * sum;
}

double bessel_j0(double x) {
  if (!std::isfinite(x)) fail(Err::NonFinite, "bessel_j0: non-finite argument");
  return std::cyl_bessel_j(0.0, std::abs(x));  // J0 is even
}

double log2_det_i_plus(const ComplexMatrix& A, double scale) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(A, Eigen::EigenvaluesOnly);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double term = 1.0 + scale * std::max(es.eigenvalues()(i), 0.0);
    acc += std::log2(term);
  }
  if (!std::isfinite(acc)) fail(Err::NonFinite, "log2_det_i_plus: non-finite result");
  return acc;
}

}  // namespace vlm::numerics
