#pragma once

#include <map>
#include <string>

#include "semih/semi_space.hpp"

namespace semih {

/// Result of the two independent membership oracles. In finite dimension
/// B_A(H) and B_{A^{1/2}}(H) coincide with {T : T(N(A)) subset N(A)};
/// both residuals are computed and their verdicts must agree.
struct Membership {
  bool member = false;
  /// ||(I - P) T^* A||_2 / max(1, ||A||_2 ||T||_2)  (Douglas range condition)
  double douglas_residual = 0.0;
  /// ||P T (I - P)||_2 / max(1, ||T||_2)            (null-space invariance)
  double null_invariance_residual = 0.0;
};

inline constexpr double kMembershipTol = 1e-10;

Membership membership(const SemiInnerSpace& space, const CMatrix& t,
                      double tol = kMembershipTol);
bool in_b_a(const SemiInnerSpace& space, const CMatrix& t);
bool in_b_a_half(const SemiInnerSpace& space, const CMatrix& t);

/// The distinguished A-adjoint A^dag T^* A. Throws NotAdmissibleError when
/// the Douglas condition fails; the result satisfies A S = T^* A and has
/// range inside R(A).
CMatrix sharp(const SemiInnerSpace& space, const CMatrix& t);

/// sharp(sharp(t)); equals P T P with P the projector onto R(A).
CMatrix double_sharp(const SemiInnerSpace& space, const CMatrix& t);

/// A-real and A-imaginary parts (T +- T^sharp)/(2, 2i); both A-selfadjoint,
/// and T = re_a(T) + i im_a(T).
CMatrix re_a(const SemiInnerSpace& space, const CMatrix& t);
CMatrix im_a(const SemiInnerSpace& space, const CMatrix& t);

struct OperatorClassFlags {
  bool member_ba = false;
  bool member_ba_half = false;
  bool a_selfadjoint = false;
  bool a_positive = false;
  bool a_normal = false;
  bool a_isometry = false;
  bool a_unitary = false;
  std::map<std::string, double> residuals;
};

/// Classifies t against each defining residual. tol <= 0 selects
/// 1e-9 * max(1, ||A||_2) * max(1, ||T||_2)^2. When the adjoint is
/// unavailable the sharp-dependent flags are false and their residuals
/// are reported as infinity.
OperatorClassFlags classify(const SemiInnerSpace& space, const CMatrix& t,
                            double tol = -1.0);

} // namespace semih
