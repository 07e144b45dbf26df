/*
 * state.hpp — n-qubit statevectors and the Pauli-sum action on them.
 */
#pragma once

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>
#include <utility>

#include "qkls/errors.hpp"
#include "qkls/pauli.hpp"

namespace qkls {

/// 2^n complex amplitudes. Operations that promise normalized output
/// renormalize; intermediates may carry arbitrary norm.
class StateVector {
 public:
  StateVector(int n, Eigen::VectorXcd amplitudes) : n_(n), amp_(std::move(amplitudes)) {
    if (n_ < 1) throw InvalidParameterError("StateVector: need n >= 1");
    if (amp_.size() != (Eigen::Index{1} << n_))
      throw DimensionMismatchError("StateVector: amplitude count != 2^n");
  }

  static StateVector computational_zero(int n) {
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    a(0) = 1.0;
    return StateVector(n, std::move(a));
  }

  int num_qubits() const { return n_; }
  Eigen::Index dim() const { return amp_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amp_; }
  Eigen::VectorXcd& amplitudes() { return amp_; }

  double norm() const { return amp_.norm(); }

  StateVector& normalize() {
    const double nrm = amp_.norm();
    if (nrm == 0.0) throw NullStateError("StateVector: cannot normalize zero vector");
    amp_ /= nrm;
    return *this;
  }

 private:
  int n_;
  Eigen::VectorXcd amp_;
};

/// |b> = H^{otimes n} |0...0>: every amplitude 2^{-n/2}.
inline StateVector prepare_b(int n) {
  if (n < 1) throw InvalidParameterError("prepare_b: need n >= 1");
  const Eigen::Index dim = Eigen::Index{1} << n;
  return StateVector(n, Eigen::VectorXcd::Constant(dim, std::pow(2.0, -0.5 * n)));
}

/// <psi|phi>, conjugating the first argument.
inline Complex inner(const StateVector& psi, const StateVector& phi) {
  if (psi.num_qubits() != phi.num_qubits())
    throw DimensionMismatchError("inner: qubit counts differ");
  return psi.amplitudes().dot(phi.amplitudes());
}

namespace detail {

/// phase * |src XOR flip> decomposition of one Pauli string.
struct PauliStringAction {
  std::size_t flip_mask = 0;  // X and Y positions
  std::size_t z_mask = 0;     // Z and Y positions (sign from parity)
  std::size_t y_mask = 0;
  int y_count = 0;

  explicit PauliStringAction(const PauliString& p) {
    const int n = p.num_qubits();
    for (int q = 0; q < n; ++q) {
      const std::size_t bit = std::size_t{1} << (n - 1 - q);
      switch (p.axis(q)) {
        case 'X': flip_mask |= bit; break;
        case 'Y': flip_mask |= bit; y_mask |= bit; z_mask |= bit; ++y_count; break;
        case 'Z': z_mask |= bit; break;
        default: break;
      }
    }
  }

  /// Amplitude factor carried from source index src to src XOR flip_mask.
  Complex phase(std::size_t src) const {
    // Y|0> = i|1>, Y|1> = -i|0>, Z|z> = (-1)^z |z>. Each Y contributes i,
    // and together with its z_mask bit the (-1)^z flips i to -i on set bits.
    int z_parity = std::popcount(src & z_mask) & 1;
    static constexpr Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex f = i_pow[y_count & 3];
    return z_parity ? -f : f;
  }
};

inline void apply_pauli_string(const PauliStringAction& act, const Eigen::VectorXcd& in,
                               Eigen::VectorXcd& out) {
  const auto dim = static_cast<std::size_t>(in.size());
  for (std::size_t src = 0; src < dim; ++src) out(src ^ act.flip_mask) = act.phase(src) * in(src);
}

}  // namespace detail

/// H |psi> as a raw (unnormalized) vector.
inline Eigen::VectorXcd apply(const PauliSum& h, const Eigen::VectorXcd& psi) {
  if (psi.size() != static_cast<Eigen::Index>(h.dim()))
    throw DimensionMismatchError("apply: dimension mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
  Eigen::VectorXcd scratch(psi.size());
  for (const auto& term : h.terms()) {
    detail::apply_pauli_string(detail::PauliStringAction(term.string), psi, scratch);
    out += term.coeff * scratch;
  }
  return out;
}

inline Eigen::VectorXcd apply(const PauliSum& h, const StateVector& psi) {
  return apply(h, psi.amplitudes());
}

}  // namespace qkls
