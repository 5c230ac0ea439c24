#pragma once

#include <complex>
#include <cstdint>
#include <variant>

#include <Eigen/Dense>

#include "qlab/sim/bits.hpp"

namespace qlab {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr int kMaxPureQubits = 20;
inline constexpr int kMaxMixedQubits = 12;

/// Pure statevector or density operator on n qubits. Qubit 0 is the most
/// significant bit of the basis index.
class QuantumState {
 public:
  enum class Mode { Pure, Mixed };

  /// Validates the norm (pure) or Hermiticity/trace/positivity (mixed).
  static QuantumState pure(Vector amplitudes, double tol = 1e-10);
  static QuantumState mixed(Matrix density, double tol = 1e-10);
  /// Skips validation; for internal producers that preserve the invariants.
  static QuantumState pure_unchecked(Vector amplitudes);
  static QuantumState mixed_unchecked(Matrix density);

  static QuantumState basis(int num_qubits, std::uint64_t index);
  static QuantumState basis(const BitString& bits);
  static QuantumState zero(int num_qubits) { return basis(num_qubits, 0); }
  static QuantumState maximally_mixed(int num_qubits);

  Mode mode() const { return is_pure() ? Mode::Pure : Mode::Mixed; }
  bool is_pure() const { return std::holds_alternative<Vector>(data_); }
  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return std::size_t{1} << num_qubits_; }

  /// Requires pure mode.
  const Vector& amplitudes() const;
  /// Density operator; computed as an outer product for pure states.
  Matrix density() const;
  QuantumState to_mixed() const;

  /// Probability of each computational basis outcome.
  Eigen::VectorXd probabilities() const;

  /// this ⊗ other; mixed if either factor is mixed.
  QuantumState tensor(const QuantumState& other) const;

  void validate(double tol = 1e-10) const;

 private:
  QuantumState(int n, std::variant<Vector, Matrix> data) : num_qubits_(n), data_(std::move(data)) {}

  int num_qubits_ = 0;
  std::variant<Vector, Matrix> data_;
};

int qubits_for_dimension(std::size_t dim);

}  // namespace qlab
