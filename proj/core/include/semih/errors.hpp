#pragma once

#include <stdexcept>
#include <string>

namespace semih {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input matrix contains NaN or Inf entries.
class NonFiniteError : public Error {
public:
  using Error::Error;
};

/// Matrix expected to be Hermitian is not, beyond tolerance.
class NotHermitianError : public Error {
public:
  using Error::Error;
};

/// Kernel has an eigenvalue below the negativity tolerance.
class NotPositiveError : public Error {
public:
  using Error::Error;
};

/// Kernel is numerically zero; every seminorm would degenerate.
class ZeroKernelError : public Error {
public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

/// Operator admits no adjoint with respect to the kernel
/// (the Douglas range condition fails).
class NotAdmissibleError : public Error {
public:
  using Error::Error;
};

/// The operator seminorm is infinite: T does not map the kernel's
/// null space into itself.
class UnboundedError : public Error {
public:
  using Error::Error;
};

/// Dense eigensolver failed to converge within its iteration budget.
class NoConvergenceError : public Error {
public:
  using Error::Error;
};

/// Invariance hypothesis of a block construction fails.
class NotInvariantError : public Error {
public:
  using Error::Error;
};

/// Requested instance classes are contradictory or out of range.
class InfeasibleSpecError : public Error {
public:
  using Error::Error;
};

/// A generated operator failed its advertised class predicate.
class ClassViolationError : public Error {
public:
  using Error::Error;
};

/// Two independent computation paths disagreed beyond tolerance.
class InternalConsistencyError : public Error {
public:
  using Error::Error;
};

/// Instance file is malformed.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace semih
