#pragma once

#include <cstdint>

#include "semih/matrix_kernel.hpp"

namespace semih {

/// Combine seeds/stream ids into a new seed (splitmix-style avalanche).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// Deterministic random source. Identical seeds produce identical
/// streams on every platform, which instance reproducibility relies on.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double gaussian();
  Complex cgaussian();  // E|z|^2 = 1
  double log_uniform(double lo, double hi);

  CVector cgaussian_vector(Eigen::Index n);
  CMatrix cgaussian_matrix(Eigen::Index rows, Eigen::Index cols);

  /// Haar-ish random unitary: QR of a complex Ginibre matrix with the
  /// phases of R's diagonal absorbed into Q.
  CMatrix random_unitary(Eigen::Index n);

private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

} // namespace semih
