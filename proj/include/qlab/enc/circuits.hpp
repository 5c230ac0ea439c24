#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qlab/sim/circuit.hpp"
#include "qlab/sim/pauli.hpp"

namespace qlab {

/// Maps a classical tag to the Pauli that pads the payload.
using PauliFunction = std::function<PauliString(const BitString& tag)>;

/// tag |-> P_{f_k(tag)} with f_k the GGM function stretched to 2n bits.
PauliFunction prf_pauli(const BitString& key, int payload_qubits);

/// For every tag value t, applies pad(t) (or its adjoint) to `payload`
/// conditioned on `tag` = t and on the extra controls.
void append_tag_controlled_pauli(QuantumCircuit& circuit, const PauliFunction& pad, const std::vector<int>& tag,
                                 const std::vector<int>& payload, bool adjoint,
                                 const std::vector<int>& controls = {},
                                 const std::vector<std::uint8_t>& values = {});

/// X on each qubit where `bits` is 1, under the given controls.
void append_xor_constant(QuantumCircuit& circuit, const BitString& bits, const std::vector<int>& qubits,
                         const std::vector<int>& controls = {}, const std::vector<std::uint8_t>& values = {});

/// Control values spelling `value` over `width` qubits (most significant first).
std::vector<std::uint8_t> value_bits(std::uint64_t value, std::size_t width);

std::vector<int> qubit_range(int first, int count);

}  // namespace qlab
