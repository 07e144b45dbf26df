#pragma once

#include <stdexcept>
#include <string>

namespace qkls {

/// Bad argument values (zero scale, kappa <= 1, epsilon out of range, ...).
struct InvalidParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured resource cap (e.g. dense materialization).
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hamiltonian has a (numerically) zero eigenvalue; kappa and H^-1 undefined.
struct SingularHamiltonianError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Projected system lost all singular values to truncation.
struct DegenerateSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Linear combination of evolutions annihilated the state.
struct NullStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace qkls
