/*
 * evolution.hpp — e^{-iHt} on statevectors.
 *
 * Exact mode diagonalizes H once (per Evolver) and applies the spectral
 * phase. Trotter modes stream first/second-order product formulas over the
 * Pauli terms; each term exponential uses e^{-i theta P} = cos(theta) I
 * - i sin(theta) P, which also carries the identity term's global phase.
 */
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <memory>
#include <vector>

#include "qkls/pauli.hpp"
#include "qkls/state.hpp"

namespace qkls {

enum class EvolutionMode { Exact, Trotter1, Trotter2 };

struct EvolutionBackend {
  EvolutionMode mode = EvolutionMode::Exact;
  int steps_per_unit_time = 100;  // Trotter modes only

  static EvolutionBackend exact() { return {EvolutionMode::Exact, 0}; }
  static EvolutionBackend trotter1(int steps) { return {EvolutionMode::Trotter1, steps}; }
  static EvolutionBackend trotter2(int steps) { return {EvolutionMode::Trotter2, steps}; }
};

struct Eigensystem {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXcd eigenvectors; // columns

  static Eigensystem of(const PauliSum& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(h));
    return {es.eigenvalues(), es.eigenvectors()};
  }
};

/// Binds a Hamiltonian to a backend; shareable across threads once built.
class Evolver {
 public:
  explicit Evolver(PauliSum h, EvolutionBackend backend = {})
      : h_(std::move(h)), backend_(backend) {
    if (backend_.mode == EvolutionMode::Exact) {
      eig_ = std::make_shared<const Eigensystem>(Eigensystem::of(h_));
    } else if (backend_.steps_per_unit_time < 1) {
      throw InvalidParameterError("Evolver: Trotter steps_per_unit_time must be >= 1");
    }
  }

  const PauliSum& hamiltonian() const { return h_; }
  const EvolutionBackend& backend() const { return backend_; }
  const Eigensystem* eigensystem() const { return eig_.get(); }

  /// e^{-iHt} |psi>, renormalized. t may be negative; t = 0 is a copy.
  StateVector evolve(double t, const StateVector& psi) const {
    if (psi.num_qubits() != h_.num_qubits())
      throw DimensionMismatchError("evolve: qubit counts differ");
    if (t == 0.0) return psi;
    Eigen::VectorXcd amp;
    if (backend_.mode == EvolutionMode::Exact) {
      Eigen::VectorXcd coords = eig_->eigenvectors.adjoint() * psi.amplitudes();
      for (Eigen::Index i = 0; i < coords.size(); ++i)
        coords(i) *= std::exp(Complex(0.0, -eig_->eigenvalues(i) * t));
      amp = eig_->eigenvectors * coords;
    } else {
      amp = trotter(t, psi.amplitudes());
    }
    StateVector out(psi.num_qubits(), std::move(amp));
    out.normalize();
    return out;
  }

 private:
  Eigen::VectorXcd trotter(double t, Eigen::VectorXcd amp) const {
    const int steps =
        std::max<int>(1, static_cast<int>(std::ceil(std::abs(t) * backend_.steps_per_unit_time)));
    const double dt = t / steps;
    std::vector<detail::PauliStringAction> actions;
    actions.reserve(h_.terms().size());
    for (const auto& term : h_.terms()) actions.emplace_back(term.string);
    Eigen::VectorXcd scratch(amp.size());
    auto apply_exp = [&](std::size_t k, double theta) {
      // e^{-i theta P} psi = cos(theta) psi - i sin(theta) P psi
      detail::apply_pauli_string(actions[k], amp, scratch);
      const double c = std::cos(theta), s = std::sin(theta);
      amp = c * amp - Complex(0.0, s) * scratch;
    };
    const std::size_t nt = h_.terms().size();
    for (int step = 0; step < steps; ++step) {
      if (backend_.mode == EvolutionMode::Trotter1) {
        for (std::size_t k = 0; k < nt; ++k) apply_exp(k, h_.terms()[k].coeff * dt);
      } else {
        for (std::size_t k = 0; k < nt; ++k) apply_exp(k, h_.terms()[k].coeff * dt / 2);
        for (std::size_t k = nt; k-- > 0;) apply_exp(k, h_.terms()[k].coeff * dt / 2);
      }
    }
    return amp;
  }

  PauliSum h_;
  EvolutionBackend backend_;
  std::shared_ptr<const Eigensystem> eig_;
};

/// One-shot convenience; prefer a long-lived Evolver when evolving repeatedly
/// under the same Hamiltonian (the Exact eigendecomposition is cached there).
inline StateVector evolve(const PauliSum& h, double t, const StateVector& psi,
                          const EvolutionBackend& backend = {}) {
  return Evolver(h, backend).evolve(t, psi);
}

/// H^{-1} b by eigendecomposition, normalized.
inline StateVector exact_solution(const PauliSum& h, const StateVector& b) {
  if (b.num_qubits() != h.num_qubits())
    throw DimensionMismatchError("exact_solution: qubit counts differ");
  const Eigensystem eig = Eigensystem::of(h);
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
    if (std::abs(eig.eigenvalues(i)) < kSingularTol)
      throw SingularHamiltonianError("exact_solution: singular Hamiltonian");
  Eigen::VectorXcd coords = eig.eigenvectors.adjoint() * b.amplitudes();
  for (Eigen::Index i = 0; i < coords.size(); ++i) coords(i) /= eig.eigenvalues(i);
  StateVector out(b.num_qubits(), eig.eigenvectors * coords);
  out.normalize();
  return out;
}

inline StateVector exact_solution(const Eigensystem& eig, const StateVector& b) {
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
    if (std::abs(eig.eigenvalues(i)) < kSingularTol)
      throw SingularHamiltonianError("exact_solution: singular Hamiltonian");
  Eigen::VectorXcd coords = eig.eigenvectors.adjoint() * b.amplitudes();
  for (Eigen::Index i = 0; i < coords.size(); ++i) coords(i) /= eig.eigenvalues(i);
  StateVector out(b.num_qubits(), eig.eigenvectors * coords);
  out.normalize();
  return out;
}

}  // namespace qkls
