#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qlab/sim/gate.hpp"

namespace qlab {

/// Ordered gate list over `arity` input qubits plus `ancillas` work qubits
/// that start in |0>. Ancillas occupy indices [arity, arity + ancillas). The
/// output register is an ordered list of qubits; everything else is traced
/// out when the circuit finishes.
class QuantumCircuit {
 public:
  explicit QuantumCircuit(int arity = 0, int ancillas = 0);

  int arity() const { return arity_; }
  int ancillas() const { return ancillas_; }
  int width() const { return arity_ + ancillas_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  const std::vector<int>& outputs() const { return outputs_; }
  void set_outputs(std::vector<int> outputs);
  /// True when the output register is exactly the input register in order.
  bool outputs_are_inputs() const;

  /// Validates target/control ranges, distinctness and unitarity.
  QuantumCircuit& add(Gate gate);

  QuantumCircuit& x(int q) { return add(Gate::named("x", {q})); }
  QuantumCircuit& y(int q) { return add(Gate::named("y", {q})); }
  QuantumCircuit& z(int q) { return add(Gate::named("z", {q})); }
  QuantumCircuit& h(int q) { return add(Gate::named("h", {q})); }
  QuantumCircuit& s(int q) { return add(Gate::named("s", {q})); }
  QuantumCircuit& t(int q) { return add(Gate::named("t", {q})); }
  QuantumCircuit& cx(int control, int target) { return add(Gate::named("x", {target}, {control})); }
  QuantumCircuit& cz(int control, int target) { return add(Gate::named("z", {target}, {control})); }
  QuantumCircuit& swap(int a, int b) { return add(Gate::named("swap", {a, b})); }
  /// X on `target` when every control qubit equals its value.
  QuantumCircuit& mcx(const std::vector<int>& controls, const std::vector<std::uint8_t>& values, int target);
  QuantumCircuit& unitary(Matrix m, std::vector<int> targets, std::string name = "u");
  QuantumCircuit& measure(int q) { return add(Gate::measure(q)); }
  QuantumCircuit& discard(int q) { return add(Gate::discard(q)); }

  /// Appends `other`'s gates, renaming qubit i of `other` to mapping[i].
  QuantumCircuit& append(const QuantumCircuit& other, const std::vector<int>& mapping);

  bool is_unitary() const;
  bool is_permutation() const;
  /// Adjoint circuit; requires a unitary circuit.
  QuantumCircuit inverse() const;

  /// Canonical versioned text encoding; equal circuits give identical bytes.
  std::string serialize() const;
  static QuantumCircuit parse(std::string_view text);

  bool same_as(const QuantumCircuit& other) const;

 private:
  int arity_;
  int ancillas_;
  std::vector<Gate> gates_;
  std::vector<int> outputs_;
};

/// Identity circuit on n qubits (no gates).
QuantumCircuit identity_circuit(int n);

}  // namespace qlab
