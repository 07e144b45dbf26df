/*
 * pauli.hpp — Pauli-string Hamiltonians.
 *
 * PauliSum stores a Hermitian operator as a real-weighted sum of n-qubit
 * Pauli strings, with helpers to build the transverse-field Ising family
 *   H = (1/zeta) (sum_j X_j + J sum_j Z_j Z_{j+1} + eta I),
 * materialize it densely, characterize its spectrum, and pick (eta, zeta)
 * that place the spectrum in [1/kappa, 1] with unit norm.
 */
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qkls/errors.hpp"

namespace qkls {

using Complex = std::complex<double>;

inline constexpr int kDefaultDenseCap = 12;

/// One tensor product of single-qubit Paulis, one axis character per qubit.
/// Qubit 0 is the leftmost character and the most significant Kronecker
/// factor, so bit position of qubit j in a basis index is n-1-j.
class PauliString {
 public:
  explicit PauliString(std::string axes) : axes_(std::move(axes)) {
    if (axes_.empty()) throw InvalidParameterError("PauliString: need n >= 1 qubits");
    for (char c : axes_) {
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        throw InvalidParameterError(std::string("PauliString: bad axis '") + c + "'");
    }
  }

  static PauliString identity(int n) { return PauliString(std::string(n, 'I')); }

  /// Single non-identity axis at `qubit` (0-based).
  static PauliString single(int n, int qubit, char axis) {
    std::string s(n, 'I');
    s.at(qubit) = axis;
    return PauliString(std::move(s));
  }

  int num_qubits() const { return static_cast<int>(axes_.size()); }
  char axis(int qubit) const { return axes_[qubit]; }
  const std::string& str() const { return axes_; }
  bool is_identity() const { return axes_.find_first_not_of('I') == std::string::npos; }

  friend bool operator==(const PauliString& a, const PauliString& b) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) = default;

 private:
  std::string axes_;
};

struct PauliTerm {
  double coeff = 0.0;
  PauliString string;
};

/// Hermitian operator sum_k coeff_k * P_k with real coefficients.
/// Canonical form: terms sorted by string, no duplicates, no zero coefficients.
class PauliSum {
 public:
  PauliSum(int n, std::vector<PauliTerm> terms) : n_(n), terms_(std::move(terms)) {
    if (n_ < 1) throw InvalidParameterError("PauliSum: need n >= 1");
    for (const auto& t : terms_) {
      if (t.string.num_qubits() != n_)
        throw DimensionMismatchError("PauliSum: term length != qubit count");
    }
    canonicalize();
  }

  int num_qubits() const { return n_; }
  std::size_t dim() const { return std::size_t{1} << n_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  nlohmann::json to_json() const;
  static PauliSum from_json(const nlohmann::json& j);

 private:
  void canonicalize() {
    std::map<std::string, double> merged;
    for (const auto& t : terms_) merged[t.string.str()] += t.coeff;
    terms_.clear();
    for (auto& [s, c] : merged) {
      if (c != 0.0) terms_.push_back({c, PauliString(s)});
    }
  }

  int n_;
  std::vector<PauliTerm> terms_;
};

/// (1/zeta) (sum_{j=0}^{n-1} X_j + J sum_{j=0}^{n-2} Z_j Z_{j+1} + eta I).
/// For n = 1 the coupling sum is empty.
inline PauliSum build_ising(int n, double J, double eta, double zeta) {
  if (n < 1) throw InvalidParameterError("build_ising: need n >= 1");
  if (zeta == 0.0) throw InvalidParameterError("build_ising: zeta must be nonzero");
  std::vector<PauliTerm> terms;
  for (int j = 0; j < n; ++j) terms.push_back({1.0 / zeta, PauliString::single(n, j, 'X')});
  for (int j = 0; j + 1 < n; ++j) {
    std::string s(n, 'I');
    s[j] = 'Z';
    s[j + 1] = 'Z';
    terms.push_back({J / zeta, PauliString(std::move(s))});
  }
  terms.push_back({eta / zeta, PauliString::identity(n)});
  return PauliSum(n, std::move(terms));
}

namespace detail {

inline Eigen::Matrix2cd pauli_matrix(char axis) {
  Eigen::Matrix2cd m;
  const Complex i{0.0, 1.0};
  switch (axis) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    default:  m << 1, 0, 0, -1; break;  // 'Z'
  }
  return m;
}

}  // namespace detail

/// Dense 2^n x 2^n matrix via Kronecker products, qubit 0 as the leading factor.
inline Eigen::MatrixXcd to_dense(const PauliSum& h, int dense_cap = kDefaultDenseCap) {
  const int n = h.num_qubits();
  if (n > dense_cap)
    throw ResourceLimitError("to_dense: n exceeds dense cap of " + std::to_string(dense_cap));
  const auto dim = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : h.terms()) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
      const Eigen::Matrix2cd p = detail::pauli_matrix(term.string.axis(q));
      Eigen::MatrixXcd next(acc.rows() * 2, acc.cols() * 2);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) next.block(r * acc.rows(), c * acc.cols(), acc.rows(), acc.cols()) = p(r, c) * acc;
      acc = std::move(next);
    }
    out += term.coeff * acc;
  }
  return out;
}

struct SpectralInfo {
  Eigen::VectorXd eigenvalues;  // ascending
  double kappa = 1.0;           // max|lambda| / min|lambda|
  double spectral_norm = 0.0;   // max|lambda|
  int sparsity_d = 0;           // max nonzeros per row of the dense matrix
};

inline constexpr double kSingularTol = 1e-12;

inline SpectralInfo spectral_info(const PauliSum& h) {
  const Eigen::MatrixXcd dense = to_dense(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense, Eigen::EigenvaluesOnly);
  SpectralInfo info;
  info.eigenvalues = es.eigenvalues();
  double min_abs = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  for (Eigen::Index i = 0; i < info.eigenvalues.size(); ++i) {
    const double a = std::abs(info.eigenvalues[i]);
    min_abs = std::min(min_abs, a);
    max_abs = std::max(max_abs, a);
  }
  if (min_abs < kSingularTol)
    throw SingularHamiltonianError("spectral_info: zero eigenvalue, kappa undefined");
  info.kappa = max_abs / min_abs;
  info.spectral_norm = max_abs;
  for (Eigen::Index r = 0; r < dense.rows(); ++r) {
    int nnz = 0;
    for (Eigen::Index c = 0; c < dense.cols(); ++c)
      if (std::abs(dense(r, c)) > 1e-12) ++nnz;
    info.sparsity_d = std::max(info.sparsity_d, nnz);
  }
  return info;
}

struct IsingCalibration {
  double eta = 0.0;
  double zeta = 1.0;
};

/// Shift/scale so the spectrum of build_ising(n, J, eta, zeta) is
/// {1/kappa, ..., 1}: eigensolve the unshifted operator once, then solve
/// (lambda_max + eta)/zeta = 1 and (lambda_min + eta)/zeta = 1/kappa.
/// The shift makes every eigenvalue positive.
inline IsingCalibration calibrate_kappa(int n, double J, double target_kappa) {
  if (!(target_kappa > 1.0))
    throw InvalidParameterError("calibrate_kappa: target kappa must exceed 1");
  const PauliSum raw = build_ising(n, J, 0.0, 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_dense(raw), Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues()(0);
  const double lmax = es.eigenvalues()(es.eigenvalues().size() - 1);
  IsingCalibration cal;
  cal.zeta = (lmax - lmin) * target_kappa / (target_kappa - 1.0);
  cal.eta = cal.zeta - lmax;
  return cal;
}

inline nlohmann::json PauliSum::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : terms_) terms.push_back({{"coeff", t.coeff}, {"string", t.string.str()}});
  return {{"n", n_}, {"terms", terms}};
}

inline PauliSum PauliSum::from_json(const nlohmann::json& j) {
  std::vector<PauliTerm> terms;
  for (const auto& t : j.at("terms"))
    terms.push_back({t.at("coeff").get<double>(), PauliString(t.at("string").get<std::string>())});
  return PauliSum(j.at("n").get<int>(), std::move(terms));
}

}  // namespace qkls
