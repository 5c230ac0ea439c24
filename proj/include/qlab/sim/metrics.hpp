#pragma once

#include <cstdint>

#include "qlab/sim/circuit.hpp"
#include "qlab/sim/state.hpp"

namespace qlab {

/// Half the trace norm of the difference, in [0, 1].
double trace_distance(const QuantumState& a, const QuantumState& b);

/// Squared Uhlmann fidelity, in [0, 1].
double fidelity(const QuantumState& a, const QuantumState& b);

/// min over global phases alpha of the operator norm of U - e^{i alpha} V.
double phase_invariant_distance(const Matrix& u, const Matrix& v);
double phase_invariant_distance(const QuantumCircuit& u, const QuantumCircuit& v);

/// Both values are trace distances in [0, 1]; multiply by 2 for the
/// unnormalized diamond-norm scale.
struct ChannelDistance {
  double lower = 0.0;     // Choi states
  double estimate = 0.0;  // best probe, Choi included
};

/// Probe set: the Choi input, every computational basis input, and
/// `random_probes` Haar-random inputs entangled with an equally sized
/// reference register.
ChannelDistance channel_distance_estimate(const QuantumCircuit& c, const QuantumCircuit& d,
                                          int random_probes = 8, std::uint64_t seed = 0x5eed);

/// Runs `c` on a state whose first c.arity() qubits feed the circuit and whose
/// remaining qubits are an untouched reference. Output: c's outputs, then the
/// reference.
QuantumState run_with_reference(const QuantumCircuit& c, const QuantumState& input);

/// (|00> + |11> + ...) / sqrt(2^n) on 2n qubits, system first.
QuantumState maximally_entangled(int n);

}  // namespace qlab
