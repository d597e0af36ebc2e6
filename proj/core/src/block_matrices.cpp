#include "semih/block_matrices.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace semih {

namespace {

constexpr double kPi = std::numbers::pi;

void require_block(const BlockSpace& bs, const CMatrix& m, const char* what) {
  if (m.rows() != bs.base().dim() || m.cols() != bs.base().dim()) {
    throw DimensionMismatchError(std::string(what) + ": block has wrong dimension");
  }
  if (!membership(bs.base(), m).member) {
    throw NotAdmissibleError(std::string(what) + ": block admits no A-adjoint");
  }
}

} // namespace

BlockSpace::BlockSpace(SemiInnerSpace base)
    : base_(std::move(base)),
      dbl_([this] {
        const int n = base_.dim();
        CMatrix big = CMatrix::Zero(2 * n, 2 * n);
        big.topLeftCorner(n, n) = base_.kernel();
        big.bottomRightCorner(n, n) = base_.kernel();
        return validate_positive(big, SpaceOptions{base_.psd_tol(), base_.rank_tol()});
      }()) {
  if (dbl_.rank() != 2 * base_.rank()) {
    throw InternalConsistencyError("BlockSpace: doubled kernel rank mismatch");
  }
}

CMatrix BlockSpace::assemble(const CMatrix& t11, const CMatrix& t12, const CMatrix& t21,
                             const CMatrix& t22) const {
  const int n = base_.dim();
  CMatrix big(2 * n, 2 * n);
  big.topLeftCorner(n, n) = t11;
  big.topRightCorner(n, n) = t12;
  big.bottomLeftCorner(n, n) = t21;
  big.bottomRightCorner(n, n) = t22;
  return big;
}

CMatrix block2(const BlockSpace& bs, const CMatrix& t11, const CMatrix& t12,
               const CMatrix& t21, const CMatrix& t22) {
  require_block(bs, t11, "block2");
  require_block(bs, t12, "block2");
  require_block(bs, t21, "block2");
  require_block(bs, t22, "block2");
  return bs.assemble(t11, t12, t21, t22);
}

double block_sharp_residual(const BlockSpace& bs, const CMatrix& t11, const CMatrix& t12,
                            const CMatrix& t21, const CMatrix& t22) {
  const CMatrix big = block2(bs, t11, t12, t21, t22);
  const CMatrix direct = sharp(bs.dbl(), big);
  const CMatrix pattern = bs.assemble(sharp(bs.base(), t11), sharp(bs.base(), t21),
                                      sharp(bs.base(), t12), sharp(bs.base(), t22));
  return spectral_norm(direct - pattern);
}

double off_diag_radius(const BlockSpace& bs, const CMatrix& t, const CMatrix& s,
                       int grid_n) {
  require_block(bs, t, "off_diag_radius");
  require_block(bs, s, "off_diag_radius");
  const CMatrix s_sharp = sharp(bs.base(), s);
  const auto f = [&](double theta) {
    const Complex phase = std::polar(1.0, theta);
    return op_seminorm(bs.base(), phase * t + std::conj(phase) * s_sharp).value;
  };
  return 0.5 * angular_sup(f, kPi, grid_n, 1e-10).value;
}

RadiusResult off_diag_radius_direct(const BlockSpace& bs, const CMatrix& t,
                                    const CMatrix& s, const EngineParams& params) {
  const int n = bs.base().dim();
  const CMatrix zero = CMatrix::Zero(n, n);
  return numerical_radius(bs.dbl(), bs.assemble(zero, t, s, zero), params);
}

double psi(const BlockSpace& bs, const CMatrix& t, const CMatrix& s,
           const EngineParams& params) {
  const CMatrix ts = sharp(bs.base(), t);
  const CMatrix ss = sharp(bs.base(), s);
  const double mixed = op_seminorm(bs.base(), t * ts + ss * s).value;
  const double omega_ts = numerical_radius(bs.base(), t * s, params).value;
  return 0.5 * std::sqrt(mixed + 2.0 * omega_ts);
}

double phi(const BlockSpace& bs, const CMatrix& t, const CMatrix& s,
           const EngineParams& params) {
  const CMatrix ts = sharp(bs.base(), t);
  const CMatrix ss = sharp(bs.base(), s);
  const double mixed = op_seminorm(bs.base(), t * ts + ss * s).value;
  const double c_ts = crawford(bs.base(), t * s, params).value;
  return 0.5 * std::sqrt(mixed + 2.0 * c_ts);
}

InvolutionMetrics involution_metrics(const BlockSpace& bs, const CMatrix& t,
                                     const EngineParams& params) {
  require_block(bs, t, "involution_metrics");
  const SemiInnerSpace& base = bs.base();
  const int n = base.dim();
  const CMatrix& p = base.range_proj();
  const CMatrix comp = CMatrix::Identity(n, n) - p;
  const double inv_res = spectral_norm(comp * t * p);
  const double tol = 1e-9 * std::max(1.0, spectral_norm(t));
  if (inv_res > tol) {
    throw NotInvariantError("involution_metrics: N(A)^perp is not invariant for T (residual " +
                            std::to_string(inv_res) + ")");
  }

  const CMatrix eye = CMatrix::Identity(n, n);
  const CMatrix big = bs.assemble(eye, t, CMatrix::Zero(n, n), -eye);

  InvolutionMetrics m;
  m.omega_bb = numerical_radius(bs.dbl(), big, params).value;
  m.norm_bb = op_seminorm(bs.dbl(), big).value;
  m.re_norm = op_seminorm(bs.dbl(), re_a(bs.dbl(), big)).value;
  m.im_norm = op_seminorm(bs.dbl(), im_a(bs.dbl(), big)).value;

  const double tn = op_seminorm(base, t).value;
  m.cf_omega_bb = 0.5 * std::sqrt(tn * tn + 4.0);
  m.cf_norm_bb = m.cf_omega_bb + 0.5 * tn;
  m.cf_re_norm = m.cf_omega_bb;
  m.cf_im_norm = 0.5 * (m.cf_norm_bb - 1.0 / m.cf_norm_bb);
  return m;
}

} // namespace semih
