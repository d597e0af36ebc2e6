#pragma once

#include "semih/radius_engine.hpp"

namespace semih {

/// A base space together with the doubled kernel diag(A, A) on which the
/// 2x2 operator-matrix constructions live.
class BlockSpace {
public:
  explicit BlockSpace(SemiInnerSpace base);

  const SemiInnerSpace& base() const { return base_; }
  const SemiInnerSpace& dbl() const { return dbl_; }

  /// Embeds four n x n blocks into the 2n x 2n matrix.
  CMatrix assemble(const CMatrix& t11, const CMatrix& t12, const CMatrix& t21,
                   const CMatrix& t22) const;

private:
  SemiInnerSpace base_;
  SemiInnerSpace dbl_;
};

/// Assembled 2x2 operator matrix; each block must admit an A-adjoint.
CMatrix block2(const BlockSpace& bs, const CMatrix& t11, const CMatrix& t12,
               const CMatrix& t21, const CMatrix& t22);

/// || sharp_dblA(T) - [[T11#, T21#], [T12#, T22#]] ||_2 over the doubled
/// space: the block-adjoint swaps the off-diagonal slots.
double block_sharp_residual(const BlockSpace& bs, const CMatrix& t11, const CMatrix& t12,
                            const CMatrix& t21, const CMatrix& t22);

/// dblA-numerical radius of [[0, T], [S, 0]] via the closed formula
/// (1/2) sup_theta || e^{i theta} T + e^{-i theta} S# ||_A.
double off_diag_radius(const BlockSpace& bs, const CMatrix& t, const CMatrix& s,
                       int grid_n = 720);

/// Same quantity computed directly on the assembled 2n x 2n matrix.
RadiusResult off_diag_radius_direct(const BlockSpace& bs, const CMatrix& t,
                                    const CMatrix& s, const EngineParams& params = {});

/// Upper/lower block-radius bound functionals
///   Psi = (1/2) sqrt(||T T# + S# S||_A + 2 omega_A(TS)),
///   Phi = (1/2) sqrt(||T T# + S# S||_A + 2 c_A(TS)).
double psi(const BlockSpace& bs, const CMatrix& t, const CMatrix& s,
           const EngineParams& params = {});
double phi(const BlockSpace& bs, const CMatrix& t, const CMatrix& s,
           const EngineParams& params = {});

/// Metrics of the involution matrix [[I, T], [0, -I]] over diag(A, A),
/// both computed directly on the 2n x 2n matrix and from the closed
/// forms in ||T||_A. Requires T to admit an A-adjoint and to leave
/// N(A)^perp invariant.
struct InvolutionMetrics {
  double omega_bb = 0.0;
  double norm_bb = 0.0;
  double re_norm = 0.0;
  double im_norm = 0.0;
  double cf_omega_bb = 0.0;
  double cf_norm_bb = 0.0;
  double cf_re_norm = 0.0;
  double cf_im_norm = 0.0;
};

InvolutionMetrics involution_metrics(const BlockSpace& bs, const CMatrix& t,
                                     const EngineParams& params = {});

} // namespace semih
