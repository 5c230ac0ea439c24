#include "qlab/enc/circuits.hpp"

#include "qlab/prf/ggm.hpp"
#include "qlab/sim/errors.hpp"

namespace qlab {

PauliFunction prf_pauli(const BitString& key, int payload_qubits) {
  const PrfKey k(key, key.size(), 2 * static_cast<std::size_t>(payload_qubits));
  return [k](const BitString& tag) { return PauliString(ggm_eval(k, tag)); };
}

std::vector<std::uint8_t> value_bits(std::uint64_t value, std::size_t width) {
  std::vector<std::uint8_t> v(width);
  for (std::size_t i = 0; i < width; ++i) v[i] = (value >> (width - 1 - i)) & 1U;
  return v;
}

std::vector<int> qubit_range(int first, int count) {
  std::vector<int> q(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) q[static_cast<std::size_t>(i)] = first + i;
  return q;
}

void append_tag_controlled_pauli(QuantumCircuit& circuit, const PauliFunction& pad, const std::vector<int>& tag,
                                 const std::vector<int>& payload, bool adjoint, const std::vector<int>& controls,
                                 const std::vector<std::uint8_t>& values) {
  if (tag.size() >= 32) throw CapacityError("tag register too wide to enumerate");
  std::vector<int> ctl = controls;
  ctl.insert(ctl.end(), tag.begin(), tag.end());
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << tag.size()); ++t) {
    const auto p = pad(BitString::from_uint(t, tag.size()));
    std::vector<std::uint8_t> val = values;
    const auto tv = value_bits(t, tag.size());
    val.insert(val.end(), tv.begin(), tv.end());
    append_pauli(circuit, p, payload, adjoint, ctl, val);
  }
}

void append_xor_constant(QuantumCircuit& circuit, const BitString& bits, const std::vector<int>& qubits,
                         const std::vector<int>& controls, const std::vector<std::uint8_t>& values) {
  if (bits.size() != qubits.size()) throw DimensionError("constant length mismatch");
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) circuit.add(Gate::named("x", {qubits[i]}, controls, values));
  }
}

}  // namespace qlab
