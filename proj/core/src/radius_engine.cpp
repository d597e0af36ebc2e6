#include "semih/radius_engine.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "semih/rng.hpp"

namespace semih {

namespace {

constexpr double kPi = std::numbers::pi;

CMatrix herm_part(const CMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

/// Extremal eigenvalues of a Hermitian matrix (no vectors).
std::pair<double, double> herm_extremes(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  const auto& v = es.eigenvalues();
  return {v(0), v(v.size() - 1)};
}

/// Golden-section maximization on [lo, hi]; assumes f is unimodal there
/// (the bracket comes from a grid cell around a local maximum).
AngularSup golden_max(const std::function<double(double)>& f, double lo, double hi,
                      double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc > fd ? AngularSup{fc, c} : AngularSup{fd, d};
}

} // namespace

AngularSup angular_sup(const std::function<double(double)>& f, double period,
                       int grid_n, double refine_tol) {
  if (grid_n < 4) grid_n = 4;
  const double h = period / grid_n;
  std::vector<double> vals(static_cast<std::size_t>(grid_n));
  for (int k = 0; k < grid_n; ++k) {
    vals[static_cast<std::size_t>(k)] = f(h * k);
  }
  std::vector<int> local_max;
  for (int k = 0; k < grid_n; ++k) {
    const double prev = vals[static_cast<std::size_t>((k + grid_n - 1) % grid_n)];
    const double next = vals[static_cast<std::size_t>((k + 1) % grid_n)];
    if (vals[static_cast<std::size_t>(k)] >= prev && vals[static_cast<std::size_t>(k)] >= next) {
      local_max.push_back(k);
    }
  }
  std::sort(local_max.begin(), local_max.end(), [&](int i, int j) {
    return vals[static_cast<std::size_t>(i)] > vals[static_cast<std::size_t>(j)];
  });
  if (local_max.size() > 3) local_max.resize(3);

  AngularSup best;
  best.value = -std::numeric_limits<double>::infinity();
  for (int k : local_max) {
    const double center = h * k;
    const AngularSup r = golden_max(f, center - h, center + h, refine_tol);
    if (r.value > best.value) best = r;
    if (vals[static_cast<std::size_t>(k)] > best.value) {
      best = AngularSup{vals[static_cast<std::size_t>(k)], center};
    }
  }
  if (best.theta < 0.0) best.theta += period;
  return best;
}

RadiusResult op_seminorm(const SemiInnerSpace& space, const CMatrix& t) {
  const TildeOperator red = reduce(space, t);
  const double v_tilde = spectral_norm(red.b);
  const double v_half =
      spectral_norm(space.sqrt_kernel() * t * space.pinv_sqrt_kernel());
  if (std::abs(v_tilde - v_half) > 1e-9 * std::max(1.0, v_tilde)) {
    throw InternalConsistencyError(
        "op_seminorm: tilde and A^{1/2}-sandwich paths disagree (" +
        std::to_string(v_tilde) + " vs " + std::to_string(v_half) + ")");
  }
  RadiusResult r;
  r.value = v_tilde;
  r.method = RadiusMethod::TildeSpectral;
  r.error_bound = 1e-13 * std::max(1.0, v_tilde);
  return r;
}

RadiusResult numerical_radius(const SemiInnerSpace& space, const CMatrix& t,
                              const EngineParams& params) {
  const TildeOperator red = reduce(space, t);
  const CMatrix& b = red.b;
  const auto f = [&b](double theta) {
    const Complex phase = std::polar(1.0, theta);
    const auto [lo, hi] = herm_extremes(herm_part(phase * b));
    return std::max(std::abs(lo), std::abs(hi));
  };
  const AngularSup sup = angular_sup(f, kPi, params.grid_n, params.refine_tol);

  const double seminorm = spectral_norm(b);
  const double sanity_tol = 1e-8 * std::max(1.0, seminorm);
  if (sup.value < 0.5 * seminorm - sanity_tol || sup.value > seminorm + sanity_tol) {
    throw InternalConsistencyError("numerical_radius: value escapes [||T||_A/2, ||T||_A]");
  }

  RadiusResult r;
  r.value = sup.value;
  r.method = RadiusMethod::ThetaSup;
  r.theta_star = sup.theta;
  r.error_bound = params.refine_tol;
  return r;
}

double sup_alpha_beta(const SemiInnerSpace& space, const CMatrix& t, int grid_n) {
  const CMatrix re = re_a(space, t);
  const CMatrix im = im_a(space, t);
  const auto f = [&](double angle) {
    return op_seminorm(space, std::cos(angle) * re + std::sin(angle) * im).value;
  };
  return angular_sup(f, kPi, grid_n, 1e-10).value;
}

RadiusResult crawford(const SemiInnerSpace& space, const CMatrix& t,
                      const EngineParams& params) {
  const TildeOperator red = reduce(space, t);
  const CMatrix& b = red.b;
  const auto f = [&b](double theta) {
    const Complex phase = std::polar(1.0, theta);
    return herm_extremes(herm_part(phase * b)).first;
  };
  const AngularSup sup = angular_sup(f, 2.0 * kPi, params.grid_n, params.refine_tol);
  RadiusResult r;
  r.value = std::max(0.0, sup.value);
  r.method = RadiusMethod::ThetaSup;
  r.theta_star = sup.theta;
  r.error_bound = params.refine_tol;
  return r;
}

RangeBoundary numerical_range_boundary(const SemiInnerSpace& space, const CMatrix& t,
                                       int count) {
  if (count < 8) {
    throw DimensionMismatchError("numerical_range_boundary: count must be >= 8");
  }
  const TildeOperator red = reduce(space, t);
  const CMatrix& b = red.b;
  const RVector inv_sqrt_d = red.d.cwiseSqrt().cwiseInverse();

  RangeBoundary out;
  out.support_points.reserve(static_cast<std::size_t>(count));
  out.angles.reserve(static_cast<std::size_t>(count));
  out.witnesses.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double theta = 2.0 * kPi * k / count;
    const Complex phase = std::polar(1.0, -theta);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm_part(phase * b));
    const CVector u = es.eigenvectors().col(es.eigenvalues().size() - 1);
    const Complex z = u.dot(b * u);
    out.support_points.push_back(z);
    out.angles.push_back(theta);
    out.witnesses.push_back(red.basis * (inv_sqrt_d.asDiagonal() * u));
  }
  return out;
}

OracleBounds sampling_oracle(const SemiInnerSpace& space, const CMatrix& t,
                             std::uint64_t seed, int samples, int ascent_iters) {
  if (!membership(space, t).member) {
    throw UnboundedError("sampling_oracle: T is not A-bounded");
  }
  const CMatrix m = space.kernel() * t;               // <Tx|x>_A = x^* m x
  const CMatrix k = t.adjoint() * space.kernel() * t; // ||Tx||_A^2 = x^* k x
  const double m_norm = spectral_norm(m);
  const double k_norm = spectral_norm(k);
  const double a_norm = space.kernel_norm();

  OracleBounds out;
  out.crawford_ub = std::numeric_limits<double>::infinity();

  const auto quad = [](const CMatrix& q, const CVector& x) { return x.dot(q * x); };
  const auto record_omega = [&](const CVector& x) {
    const double v = std::abs(quad(m, x));
    out.omega_lb = std::max(out.omega_lb, v);
    out.crawford_ub = std::min(out.crawford_ub, v);
  };

  const std::vector<CVector> starts =
      space.sample_a_unit(mix_seed(seed, 0x0a11), samples, /*include_null=*/false);

  CVector best_min;
  double best_min_val = std::numeric_limits<double>::infinity();

  for (const CVector& start : starts) {
    record_omega(start);
    {
      const double v = std::abs(quad(m, start));
      if (v < best_min_val) {
        best_min_val = v;
        best_min = start;
      }
    }
    out.seminorm_lb = std::max(out.seminorm_lb, std::sqrt(std::max(0.0, quad(k, start).real())));

    // omega ascent: shifted power steps on Herm(e^{-i phi} m) with phi
    // re-aligned to the current quadratic form value.
    if (m_norm > 0.0) {
      CVector x = start;
      for (int it = 0; it < ascent_iters; ++it) {
        const Complex z = quad(m, x);
        const Complex phase = (std::abs(z) > 0.0) ? std::conj(z) / std::abs(z) : Complex(1.0, 0.0);
        const CVector hx = 0.5 * (phase * (m * x) + std::conj(phase) * (m.adjoint() * x));
        CVector y = x + hx / m_norm;
        const double nrm = space.seminorm_vec(y);
        if (nrm < 1e-12) break;
        x = y / nrm;
        record_omega(x);
      }
    }

    // seminorm ascent: projected gradient on the generalized Rayleigh
    // quotient x^* k x / x^* A x.
    if (k_norm > 0.0) {
      CVector x = start;
      for (int it = 0; it < ascent_iters; ++it) {
        const double rho = quad(k, x).real();
        const CVector grad = k * x - rho * (space.kernel() * x);
        CVector y = x + grad / (k_norm + rho * a_norm);
        const double nrm = space.seminorm_vec(y);
        if (nrm < 1e-12) break;
        x = y / nrm;
        out.seminorm_lb = std::max(out.seminorm_lb, std::sqrt(std::max(0.0, quad(k, x).real())));
      }
    }
  }

  // crawford descent from the smallest sampled value.
  if (best_min.size() > 0 && m_norm > 0.0) {
    CVector x = best_min;
    for (int it = 0; it < ascent_iters; ++it) {
      const Complex z = quad(m, x);
      if (std::abs(z) == 0.0) break;
      const Complex phase = std::conj(z) / std::abs(z);
      const CVector hx = 0.5 * (phase * (m * x) + std::conj(phase) * (m.adjoint() * x));
      CVector y = x - hx / m_norm;
      const double nrm = space.seminorm_vec(y);
      if (nrm < 1e-12) break;
      x = y / nrm;
      record_omega(x);
    }
  }
  return out;
}

} // namespace semih
