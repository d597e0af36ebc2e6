#include "semih/matrix_kernel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace semih {

bool all_finite(const CMatrix& m) {
  return m.allFinite();
}

void require_finite(const CMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw NonFiniteError(std::string(what) + ": non-finite entries");
  }
}

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double spectral_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<CMatrix>(m).singularValues()(0);
}

bool is_hermitian(const CMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, max_abs(m));
  return max_abs(m - m.adjoint()) <= rel_tol * scale;
}

HermEig herm_eig(const CMatrix& m) {
  require_finite(m, "herm_eig");
  if (m.rows() != m.cols()) {
    throw NotHermitianError("herm_eig: matrix is not square");
  }
  if (!is_hermitian(m)) {
    throw NotHermitianError("herm_eig: matrix is not Hermitian within tolerance");
  }
  // Work on the symmetrized matrix so roundoff in the input cannot leak
  // through the solver's lower-triangle convention.
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw NoConvergenceError("herm_eig: eigensolver did not converge");
  }
  return HermEig{es.eigenvalues(), es.eigenvectors()};
}

Svd svd(const CMatrix& m) {
  require_finite(m, "svd");
  Eigen::JacobiSVD<CMatrix> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return Svd{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

CMatrix pinv(const CMatrix& m, double rank_tol) {
  const Svd dec = svd(m);
  const Eigen::Index k = dec.sigma.size();
  RVector inv = RVector::Zero(k);
  const double cutoff = (k > 0) ? rank_tol * dec.sigma(0) : 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (dec.sigma(i) > cutoff && dec.sigma(i) > 0.0) inv(i) = 1.0 / dec.sigma(i);
  }
  return dec.v.leftCols(k) * inv.asDiagonal() * dec.u.leftCols(k).adjoint();
}

double spectral_radius(const CMatrix& m) {
  require_finite(m, "spectral_radius");
  if (m.rows() != m.cols()) {
    throw DimensionMismatchError("spectral_radius: matrix is not square");
  }
  if (m.size() == 0) return 0.0;
  Eigen::ComplexEigenSolver<CMatrix> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw NoConvergenceError("spectral_radius: eigensolver did not converge");
  }
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

CMatrix abs_value(const CMatrix& m) {
  require_finite(m, "abs_value");
  if (m.rows() != m.cols()) {
    throw DimensionMismatchError("abs_value: matrix is not square");
  }
  const HermEig e = herm_eig(m.adjoint() * m);
  RVector roots = e.values.cwiseMax(0.0).cwiseSqrt();
  CMatrix r = e.vectors * roots.asDiagonal() * e.vectors.adjoint();
  return 0.5 * (r + r.adjoint());
}

CMatrix range_projector(const CMatrix& m, double rank_tol) {
  const Svd dec = svd(m);
  const double cutoff = (dec.sigma.size() > 0) ? rank_tol * dec.sigma(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < dec.sigma.size() && dec.sigma(rank) > cutoff && dec.sigma(rank) > 0.0) {
    ++rank;
  }
  CMatrix p = dec.u.leftCols(rank) * dec.u.leftCols(rank).adjoint();
  return 0.5 * (p + p.adjoint());
}

} // namespace semih
