#pragma once

#include <optional>
#include <string>

#include "qlab/obf/program.hpp"
#include "qlab/sim/circuit.hpp"
#include "qlab/sim/state.hpp"

namespace qlab {

/// Largest payload the ciphertext circuit will carry.
inline constexpr int kMaxWitnessPayloadQubits = 4;

enum class InstanceKind { Yes, No };

/// Small verifier over a witness register. Circuit wires: witness qubits
/// first, then one accept qubit that starts in |0>.
struct ToyVerifier {
  std::string instance_id;
  InstanceKind kind = InstanceKind::No;
  int witness_qubits = 0;
  QuantumCircuit circuit;
  /// Accepted with certainty; present for yes-instances.
  std::optional<QuantumState> witness;

  int accept_qubit() const { return witness_qubits; }
};

/// Accepts states close to a hidden Haar-random target: undo the target's
/// preparation, then test for all zeros.
ToyVerifier make_yes_instance(int n, Rng& rng);
/// Tilts the accept qubit by an angle with sin^2 = 2^-(n+1), and only when the
/// witness reads all zeros after a hidden rotation, so no witness gets past 2^-(n+1).
ToyVerifier make_no_instance(int n, Rng& rng);

/// Acceptance probability of `witness` under the verifier.
double accept_probability(const ToyVerifier& v, const QuantumState& witness);

/// Circuit on the witness that outputs `payload` on accept and |0..0> on
/// reject. Wires: witness, accept, output, fresh payload, purifying reference.
QuantumCircuit witness_lock_circuit(const ToyVerifier& v, const QuantumState& payload);

ObfuscatedProgram we_encrypt(const ToyVerifier& v, const QuantumState& payload, const Obfuscator& obf,
                             const BitString& randomness = BitString());
QuantumState we_decrypt(ObfuscatedProgram& ct, const QuantumState& witness);

}  // namespace qlab
