#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qlab/sim/circuit.hpp"
#include "qlab/sim/state.hpp"

namespace qlab {

/// Runs `circuit` on `input` (arity qubits; ancillas start in |0>) and returns
/// the output register.
///
/// Pure inputs stay pure through unitary gates. Measurements and discards on a
/// pure input sample outcomes from `rng`. With no rng, a measurement whose
/// outcome is certain is applied in place; the first one that can branch
/// switches the run to the mixed representation, so the result is the
/// deterministic post-measurement ensemble. Mixed inputs always evolve as density operators. Registers of 14
/// or more qubits use a sparse amplitude map, which keeps basis-state heavy
/// cryptographic circuits cheap.
QuantumState run_circuit(const QuantumCircuit& circuit, const QuantumState& input, Rng* rng = nullptr);

/// Reduced state on `keep`, in the listed order.
QuantumState partial_trace(const QuantumState& state, const std::vector<int>& keep);

/// Reorders qubits: qubit i of the result is qubit order[i] of `state`.
QuantumState permute_qubits(const QuantumState& state, const std::vector<int>& order);

/// Unitary matrix of a unitary circuit with no ancillas and identity outputs.
Matrix circuit_unitary(const QuantumCircuit& circuit);

/// Classical evaluation of a permutation circuit on a basis input. Returns the
/// output register as an integer. Handles any width up to 64 qubits.
std::uint64_t run_basis(const QuantumCircuit& circuit, std::uint64_t input);

struct Projection {
  double probability = 0.0;
  /// Normalized post-measurement state (all qubits kept). Empty when the
  /// outcome has zero probability.
  std::optional<QuantumState> state;
};

/// Projects `qubits` onto the computational basis values `values`.
Projection project(const QuantumState& state, const std::vector<int>& qubits, const BitString& values);

/// If `qubits` hold a definite computational basis value (probability at least
/// 1 - tol), returns it together with the reduced state of the other qubits.
std::optional<std::pair<BitString, QuantumState>> split_basis(const QuantumState& state,
                                                              const std::vector<int>& qubits,
                                                              double tol = 1e-9);

/// Samples a computational basis measurement of `qubits`.
BitString sample_measurement(const QuantumState& state, const std::vector<int>& qubits, Rng& rng);

/// The state as a statevector when its density operator has rank one
/// (largest eigenvalue at least 1 - tol). The global phase is arbitrary.
std::optional<QuantumState> as_pure(const QuantumState& state, double tol = 1e-9);

/// Partial trace that stays pure when the kept qubits are unentangled.
QuantumState reduce(const QuantumState& state, const std::vector<int>& keep, double tol = 1e-9);

/// Applies a single gate to a state (gate qubits index the state directly).
QuantumState apply_gate(const QuantumState& state, const Gate& gate);

}  // namespace qlab
