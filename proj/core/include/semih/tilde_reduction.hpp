#pragma once

#include <utility>

#include "semih/a_adjoint.hpp"

namespace semih {

/// Matrix of the operator induced on R(A^{1/2}) (= R(A) here), expressed
/// in the orthonormal eigenbasis of R(A). With V the basis and d the
/// positive eigenvalues of A,
///
///   b = diag(sqrt(d)) V^* T V diag(1/sqrt(d)),
///
/// and the de Branges-Rovnyak inner product becomes the standard one in
/// these coordinates. Operator seminorm and numerical radius transfer:
/// ||T||_A = sigma_max(b), omega_A(T) = omega(b).
struct TildeOperator {
  int r = 0;
  CMatrix b;
  CMatrix basis;  // n x r
  RVector d;      // r positive eigenvalues, ascending
};

/// Throws UnboundedError when T does not map N(A) into itself
/// (equivalently, ||T||_A = +infinity).
TildeOperator reduce(const SemiInnerSpace& space, const CMatrix& t);

/// || reduce(sharp(T)).b - reduce(T).b^* ||_2
double tilde_sharp_residual(const SemiInnerSpace& space, const CMatrix& t);

/// Multiplicativity/additivity residuals of the reduction:
/// (|| reduce(XY).b - Bx By ||_2 , || reduce(X+Y).b - (Bx + By) ||_2).
std::pair<double, double> tilde_homomorphism(const SemiInnerSpace& space,
                                             const CMatrix& x, const CMatrix& y);

} // namespace semih
