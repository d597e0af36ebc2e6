#include "semih/semi_space.hpp"

#include <cmath>

#include "semih/rng.hpp"

namespace semih {

SemiInnerSpace::SemiInnerSpace(const CMatrix& a, SpaceOptions opts) {
  require_finite(a, "validate_positive");
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw DimensionMismatchError("validate_positive: kernel must be square and nonempty");
  }
  if (!is_hermitian(a)) {
    throw NotHermitianError("validate_positive: kernel is not Hermitian within tolerance");
  }
  n_ = static_cast<int>(a.rows());
  a_ = 0.5 * (a + a.adjoint());
  rank_tol_ = opts.rank_tol;

  eig_ = herm_eig(a_);
  lambda_max_ = eig_.values.size() > 0 ? eig_.values(eig_.values.size() - 1) : 0.0;
  if (lambda_max_ < 0.0) lambda_max_ = 0.0;

  psd_tol_ = opts.psd_tol > 0.0 ? opts.psd_tol : 1e-10 * std::max(1.0, lambda_max_);
  min_eig_raw_ = eig_.values(0);
  if (min_eig_raw_ < -psd_tol_) {
    throw NotPositiveError("validate_positive: kernel has eigenvalue " +
                           std::to_string(min_eig_raw_) + " below -" +
                           std::to_string(psd_tol_));
  }

  for (Eigen::Index i = 0; i < eig_.values.size(); ++i) {
    if (eig_.values(i) < 0.0) {
      eig_.values(i) = 0.0;
      ++clamped_count_;
    }
  }

  const double cutoff = rank_tol_ * lambda_max_;
  r_ = 0;
  for (Eigen::Index i = 0; i < eig_.values.size(); ++i) {
    if (eig_.values(i) > cutoff) ++r_;
  }
  if (r_ < 1) {
    throw ZeroKernelError("validate_positive: kernel is numerically zero");
  }

  RVector sqrt_vals = eig_.values.cwiseSqrt();
  sqrt_a_ = eig_.vectors * sqrt_vals.asDiagonal() * eig_.vectors.adjoint();
  sqrt_a_ = 0.5 * (sqrt_a_ + sqrt_a_.adjoint());

  RVector inv_sqrt = RVector::Zero(n_);
  RVector inv_full = RVector::Zero(n_);
  for (Eigen::Index i = n_ - r_; i < n_; ++i) {
    inv_sqrt(i) = 1.0 / std::sqrt(eig_.values(i));
    inv_full(i) = 1.0 / eig_.values(i);
  }
  pinv_sqrt_a_ = eig_.vectors * inv_sqrt.asDiagonal() * eig_.vectors.adjoint();
  pinv_a_ = eig_.vectors * inv_full.asDiagonal() * eig_.vectors.adjoint();

  proj_r_ = eig_.vectors.rightCols(r_) * eig_.vectors.rightCols(r_).adjoint();
  proj_r_ = 0.5 * (proj_r_ + proj_r_.adjoint());
}

Complex SemiInnerSpace::sip(const CVector& x, const CVector& y) const {
  if (x.size() != n_ || y.size() != n_) {
    throw DimensionMismatchError("sip: vector dimension does not match the space");
  }
  return y.dot(a_ * x);
}

double SemiInnerSpace::seminorm_vec(const CVector& x) const {
  const double q = sip(x, x).real();
  return std::sqrt(std::max(0.0, q));
}

std::vector<CVector> SemiInnerSpace::sample_a_unit(std::uint64_t seed, int count,
                                                   bool include_null) const {
  std::vector<CVector> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  Rng rng(mix_seed(seed, 0x5e31));
  const auto v = basis();
  for (int k = 0; k < count; ++k) {
    CVector x;
    double nrm = 0.0;
    do {
      x = v * rng.cgaussian_vector(r_);
      nrm = seminorm_vec(x);
    } while (nrm < 1e-8);
    x /= nrm;
    if (include_null && r_ < n_) {
      x += null_basis() * rng.cgaussian_vector(n_ - r_);
    }
    out.push_back(std::move(x));
  }
  return out;
}

SemiInnerSpace validate_positive(const CMatrix& a, SpaceOptions opts) {
  return SemiInnerSpace(a, opts);
}

} // namespace semih
