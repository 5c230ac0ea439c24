#pragma once

#include <cstdint>
#include <vector>

#include "qlab/sim/circuit.hpp"
#include "qlab/sim/state.hpp"

namespace qlab {

/// n-qubit Pauli operator indexed by 2n bits (x_1 z_1 ... x_n z_n); qubit i
/// receives X^{x_i} Z^{z_i}.
class PauliString {
 public:
  explicit PauliString(BitString bits);
  static PauliString identity(int num_qubits);
  static PauliString random(int num_qubits, Rng& rng);
  /// The index-th of the 4^n strings (index read as the 2n-bit integer).
  static PauliString from_index(int num_qubits, std::uint64_t index);

  int num_qubits() const { return static_cast<int>(bits_.size() / 2); }
  bool x(int qubit) const { return bits_[2 * static_cast<std::size_t>(qubit)]; }
  bool z(int qubit) const { return bits_[2 * static_cast<std::size_t>(qubit) + 1]; }
  const BitString& bits() const { return bits_; }

  Matrix as_unitary() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  BitString bits_;
};

/// P rho P^dagger, or P^dagger rho P when `adjoint` is set. Pure states pick
/// up the operator's exact phase, so the adjoint undoes the forward map.
QuantumState pauli_apply(const PauliString& r, const QuantumState& state, bool adjoint = false);

/// Appends P (or P^dagger) on `qubits`, each gate conditioned on `controls`.
void append_pauli(QuantumCircuit& circuit, const PauliString& r, const std::vector<int>& qubits, bool adjoint = false,
                  const std::vector<int>& controls = {}, const std::vector<std::uint8_t>& values = {});

/// Haar-random pure state from normalized complex Gaussians.
QuantumState sample_random_state(int num_qubits, Rng& rng);
QuantumState sample_random_state(int num_qubits, std::uint64_t seed);

/// Random density operator of the given rank (Ginibre construction).
QuantumState sample_random_mixed_state(int num_qubits, int rank, Rng& rng);

/// Haar-random unitary (QR of a Ginibre matrix with the phase fix).
Matrix sample_haar_unitary(int num_qubits, Rng& rng);

/// Some unitary whose first column is the unit vector `column`.
Matrix unitary_with_first_column(const Vector& column);

}  // namespace qlab
