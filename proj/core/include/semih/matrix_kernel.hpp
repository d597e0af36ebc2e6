#pragma once

#include <Eigen/Dense>
#include <complex>

#include "semih/errors.hpp"

namespace semih {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kDefaultRankTol = 1e-12;

bool all_finite(const CMatrix& m);
void require_finite(const CMatrix& m, const char* what);

/// Max absolute entry (the ||.||_max norm).
double max_abs(const CMatrix& m);

/// Largest singular value.
double spectral_norm(const CMatrix& m);

bool is_hermitian(const CMatrix& m, double rel_tol = 1e-10);

/// Eigendecomposition of a Hermitian matrix, values ascending,
/// columns of `vectors` orthonormal.
struct HermEig {
  RVector values;
  CMatrix vectors;
};

HermEig herm_eig(const CMatrix& m);

/// Full SVD, singular values descending: m = u * diag(sigma) * v^*.
struct Svd {
  CMatrix u;
  RVector sigma;
  CMatrix v;
};

Svd svd(const CMatrix& m);

/// Moore-Penrose pseudoinverse. Singular values at or below
/// rank_tol * sigma_max are treated as zero.
CMatrix pinv(const CMatrix& m, double rank_tol = kDefaultRankTol);

/// max |lambda| over the (generally complex) spectrum.
double spectral_radius(const CMatrix& m);

/// (m^* m)^{1/2}; Hermitian PSD.
CMatrix abs_value(const CMatrix& m);

/// Orthogonal projector onto the numerical column space of m.
CMatrix range_projector(const CMatrix& m, double rank_tol = kDefaultRankTol);

} // namespace semih
