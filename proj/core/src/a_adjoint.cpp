#include "semih/a_adjoint.hpp"

#include <cmath>
#include <limits>

namespace semih {

namespace {

void require_operator(const SemiInnerSpace& space, const CMatrix& t, const char* what) {
  require_finite(t, what);
  if (t.rows() != space.dim() || t.cols() != space.dim()) {
    throw DimensionMismatchError(std::string(what) + ": operator dimension does not match the space");
  }
}

} // namespace

Membership membership(const SemiInnerSpace& space, const CMatrix& t, double tol) {
  require_operator(space, t, "membership");
  const CMatrix& a = space.kernel();
  const CMatrix& p = space.range_proj();
  const Eigen::Index n = space.dim();
  const CMatrix comp = CMatrix::Identity(n, n) - p;

  const double norm_t = spectral_norm(t);
  const double norm_a = space.kernel_norm();

  Membership m;
  m.douglas_residual =
      spectral_norm(comp * t.adjoint() * a) / std::max(1.0, norm_a * norm_t);
  m.null_invariance_residual =
      spectral_norm(p * t * comp) / std::max(1.0, norm_t);

  const bool douglas_ok = m.douglas_residual <= tol;
  const bool null_ok = m.null_invariance_residual <= tol;
  if (douglas_ok != null_ok) {
    throw InternalConsistencyError(
        "membership: Douglas and null-invariance oracles disagree (residuals " +
        std::to_string(m.douglas_residual) + " vs " +
        std::to_string(m.null_invariance_residual) + ")");
  }
  m.member = douglas_ok;
  return m;
}

bool in_b_a(const SemiInnerSpace& space, const CMatrix& t) {
  return membership(space, t).member;
}

bool in_b_a_half(const SemiInnerSpace& space, const CMatrix& t) {
  return membership(space, t).member;
}

CMatrix sharp(const SemiInnerSpace& space, const CMatrix& t) {
  if (!membership(space, t).member) {
    throw NotAdmissibleError("sharp: operator admits no A-adjoint (Douglas condition fails)");
  }
  const CMatrix& a = space.kernel();
  const CMatrix s = space.pinv_kernel() * t.adjoint() * a;

  const double scale = std::max(1.0, space.kernel_norm() * std::max(1.0, spectral_norm(t)));
  const double eq_res = spectral_norm(a * s - t.adjoint() * a);
  if (eq_res > 1e-9 * scale) {
    throw InternalConsistencyError("sharp: A S = T^* A residual " + std::to_string(eq_res));
  }
  const Eigen::Index n = space.dim();
  const CMatrix comp = CMatrix::Identity(n, n) - space.range_proj();
  const double range_res = spectral_norm(comp * s);
  if (range_res > 1e-9 * scale) {
    throw InternalConsistencyError("sharp: range containment residual " + std::to_string(range_res));
  }
  return s;
}

CMatrix double_sharp(const SemiInnerSpace& space, const CMatrix& t) {
  const CMatrix s = sharp(space, sharp(space, t));
  const CMatrix& p = space.range_proj();
  const double scale = std::max(1.0, spectral_norm(t));
  if (spectral_norm(s - p * t * p) > 1e-9 * scale) {
    throw InternalConsistencyError("double_sharp: P T P identity violated");
  }
  return s;
}

CMatrix re_a(const SemiInnerSpace& space, const CMatrix& t) {
  return 0.5 * (t + sharp(space, t));
}

CMatrix im_a(const SemiInnerSpace& space, const CMatrix& t) {
  return Complex(0.0, -0.5) * (t - sharp(space, t));
}

OperatorClassFlags classify(const SemiInnerSpace& space, const CMatrix& t, double tol) {
  require_operator(space, t, "classify");
  const CMatrix& a = space.kernel();
  const double norm_t = spectral_norm(t);
  if (tol <= 0.0) {
    tol = 1e-9 * std::max(1.0, space.kernel_norm()) * std::max(1.0, norm_t) * std::max(1.0, norm_t);
  }

  OperatorClassFlags f;
  const Membership m = membership(space, t);
  f.member_ba = m.member;
  f.member_ba_half = m.member;
  f.residuals["douglas"] = m.douglas_residual;
  f.residuals["null_invariance"] = m.null_invariance_residual;

  const CMatrix at = a * t;
  const double self_res = spectral_norm(at - t.adjoint() * a);
  f.residuals["a_selfadjoint"] = self_res;
  f.a_selfadjoint = self_res <= tol;

  if (f.a_selfadjoint) {
    const CMatrix sym = 0.5 * (at + at.adjoint());
    const double lambda_min = herm_eig(sym).values(0);
    f.residuals["a_positive"] = std::max(0.0, -lambda_min);
    f.a_positive = lambda_min >= -tol;
  } else {
    f.residuals["a_positive"] = std::numeric_limits<double>::infinity();
  }

  const double iso_res = spectral_norm(t.adjoint() * a * t - a);
  f.residuals["a_isometry"] = iso_res;
  f.a_isometry = iso_res <= tol;

  if (m.member) {
    const CMatrix ts = sharp(space, t);
    const double normal_res = spectral_norm(ts * t - t * ts);
    f.residuals["a_normal"] = normal_res;
    f.a_normal = normal_res <= tol;

    const double adj_iso_res = spectral_norm(ts.adjoint() * a * ts - a);
    f.residuals["a_unitary"] = adj_iso_res;
    f.a_unitary = f.a_isometry && adj_iso_res <= tol;
  } else {
    f.residuals["a_normal"] = std::numeric_limits<double>::infinity();
    f.residuals["a_unitary"] = std::numeric_limits<double>::infinity();
  }
  return f;
}

} // namespace semih
