#pragma once

#include <cstdint>
#include <vector>

#include "semih/matrix_kernel.hpp"

namespace semih {

struct SpaceOptions {
  /// Absolute eigenvalue negativity tolerance; <= 0 selects the default
  /// 1e-10 * max(1, lambda_max(A)).
  double psd_tol = -1.0;
  /// Relative singular/eigenvalue cutoff for all rank decisions.
  double rank_tol = kDefaultRankTol;
};

/// Validated positive kernel A with cached spectral data. Immutable after
/// construction; the rank decision made here is the one every dependent
/// quantity reuses.
class SemiInnerSpace {
public:
  SemiInnerSpace(const CMatrix& a, SpaceOptions opts = {});

  int dim() const { return n_; }
  int rank() const { return r_; }

  const CMatrix& kernel() const { return a_; }
  const CMatrix& sqrt_kernel() const { return sqrt_a_; }
  const CMatrix& pinv_sqrt_kernel() const { return pinv_sqrt_a_; }
  const CMatrix& pinv_kernel() const { return pinv_a_; }
  const CMatrix& range_proj() const { return proj_r_; }

  /// n x r matrix of eigenvectors spanning R(A), eigenvalues ascending.
  Eigen::Block<const CMatrix> basis() const { return eig_.vectors.rightCols(r_); }
  /// n x (n-r) matrix of eigenvectors spanning N(A).
  Eigen::Block<const CMatrix> null_basis() const { return eig_.vectors.leftCols(n_ - r_); }
  /// The r positive eigenvalues, ascending (clamped copy).
  Eigen::VectorBlock<const RVector> positive_eigs() const { return eig_.values.tail(r_); }
  const HermEig& eig() const { return eig_; }

  double lambda_max() const { return lambda_max_; }
  double kernel_norm() const { return lambda_max_; }
  double psd_tol() const { return psd_tol_; }
  double rank_tol() const { return rank_tol_; }

  /// Clamping metadata: how many (slightly) negative eigenvalues were
  /// raised to zero, and the most negative raw value seen.
  int clamped_count() const { return clamped_count_; }
  double min_eigenvalue_raw() const { return min_eig_raw_; }

  /// <x|y>_A = <Ax|y>; linear in x, conjugate-linear in y.
  Complex sip(const CVector& x, const CVector& y) const;
  /// sqrt(max(0, Re <x|x>_A)).
  double seminorm_vec(const CVector& x) const;

  /// Deterministic A-unit samples. Each vector has a complex-Gaussian
  /// direction inside R(A) normalized to seminorm one; when include_null
  /// is set an independent Gaussian null-space component is added, which
  /// must not change any A-quantity downstream.
  std::vector<CVector> sample_a_unit(std::uint64_t seed, int count,
                                     bool include_null = false) const;

private:
  int n_ = 0;
  int r_ = 0;
  CMatrix a_;
  HermEig eig_;
  CMatrix sqrt_a_, pinv_sqrt_a_, pinv_a_, proj_r_;
  double lambda_max_ = 0.0;
  double psd_tol_ = 0.0;
  double rank_tol_ = kDefaultRankTol;
  int clamped_count_ = 0;
  double min_eig_raw_ = 0.0;
};

/// Validates A (Hermitian, positive up to tolerance, nonzero) and builds
/// the cached space.
SemiInnerSpace validate_positive(const CMatrix& a, SpaceOptions opts = {});

} // namespace semih
