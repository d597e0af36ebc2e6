#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "semih/tilde_reduction.hpp"

namespace semih {

/// sup of a periodic function over [0, period): uniform grid, then
/// golden-section refinement around the top local grid maxima (up to
/// three, so a near-tie between bumps cannot drop the global one).
struct AngularSup {
  double value = 0.0;
  double theta = 0.0;
};

AngularSup angular_sup(const std::function<double(double)>& f, double period,
                       int grid_n, double refine_tol);

enum class RadiusMethod { TildeSpectral, ThetaSup, Oracle };

struct RadiusResult {
  double value = 0.0;
  RadiusMethod method = RadiusMethod::TildeSpectral;
  std::optional<double> theta_star;
  /// A-priori bound on |reported - true| from the angular grid spacing
  /// plus refinement: ||T||_A * (pi / grid_n) before refinement, the
  /// refinement tolerance after.
  double error_bound = 0.0;
};

struct EngineParams {
  int grid_n = 720;
  double refine_tol = 1e-10;
};

/// ||T||_A = sigma_max of the tilde matrix; cross-checked against
/// sigma_max(A^{1/2} T (A^{1/2})^dag), which must agree to 1e-9 relative.
/// Throws UnboundedError when T is not A-bounded.
RadiusResult op_seminorm(const SemiInnerSpace& space, const CMatrix& t);

/// omega_A(T) = sup_theta || (e^{i theta} B + e^{-i theta} B^*)/2 ||_2 over
/// the tilde matrix B, by uniform grid over [0, pi) plus golden-section
/// refinement around the best grid points.
RadiusResult numerical_radius(const SemiInnerSpace& space, const CMatrix& t,
                              const EngineParams& params = {});

/// Independent route to omega_A via sup over alpha^2 + beta^2 = 1 of
/// || alpha Re_A(T) + beta Im_A(T) ||_A, each seminorm evaluated through
/// the A-adjoint and a fresh reduction.
double sup_alpha_beta(const SemiInnerSpace& space, const CMatrix& t, int grid_n = 720);

/// A-Crawford number: distance from 0 to the convex compact W_A(T),
/// max(0, sup_theta lambda_min(Herm(e^{i theta} B))) over [0, 2 pi).
RadiusResult crawford(const SemiInnerSpace& space, const CMatrix& t,
                      const EngineParams& params = {});

struct RangeBoundary {
  std::vector<Complex> support_points;
  std::vector<double> angles;
  /// A-unit witnesses: support_points[k] = <T w_k | w_k>_A.
  std::vector<CVector> witnesses;
};

/// Extreme points of W_A(T) in `count` directions (count >= 8).
RangeBoundary numerical_range_boundary(const SemiInnerSpace& space, const CMatrix& t,
                                       int count);

/// Certified one-sided bounds from random A-unit vectors in R(A), each
/// improved by projected local ascent on the A-unit sphere. Lower bounds
/// for omega_A and ||.||_A, upper bound for c_A.
struct OracleBounds {
  double omega_lb = 0.0;
  double seminorm_lb = 0.0;
  double crawford_ub = 0.0;
};

OracleBounds sampling_oracle(const SemiInnerSpace& space, const CMatrix& t,
                             std::uint64_t seed, int samples = 20000,
                             int ascent_iters = 10);

} // namespace semih
