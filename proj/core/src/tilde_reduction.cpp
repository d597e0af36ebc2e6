#include "semih/tilde_reduction.hpp"

#include <cmath>

namespace semih {

TildeOperator reduce(const SemiInnerSpace& space, const CMatrix& t) {
  if (!membership(space, t).member) {
    throw UnboundedError("reduce: T does not leave N(A) invariant; ||T||_A is infinite");
  }
  TildeOperator out;
  out.r = space.rank();
  out.basis = space.basis();
  out.d = space.positive_eigs();
  const RVector sqrt_d = out.d.cwiseSqrt();
  const CMatrix compressed = out.basis.adjoint() * t * out.basis;
  out.b = sqrt_d.asDiagonal() * compressed * sqrt_d.cwiseInverse().asDiagonal();
  return out;
}

double tilde_sharp_residual(const SemiInnerSpace& space, const CMatrix& t) {
  const CMatrix bs = reduce(space, sharp(space, t)).b;
  const CMatrix b = reduce(space, t).b;
  return spectral_norm(bs - b.adjoint());
}

std::pair<double, double> tilde_homomorphism(const SemiInnerSpace& space,
                                             const CMatrix& x, const CMatrix& y) {
  const CMatrix bx = reduce(space, x).b;
  const CMatrix by = reduce(space, y).b;
  const double res_mul = spectral_norm(reduce(space, x * y).b - bx * by);
  const double res_add = spectral_norm(reduce(space, x + y).b - (bx + by));
  return {res_mul, res_add};
}

} // namespace semih
