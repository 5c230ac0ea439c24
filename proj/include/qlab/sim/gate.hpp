#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlab/sim/state.hpp"

namespace qlab {

enum class GateKind { Unitary, Measure, Discard };

/// One circuit instruction. Unitary gates carry their matrix (row-major in the
/// target order, first target most significant) and may be conditioned on
/// control qubits taking given computational-basis values. Measurements
/// dephase their target in the computational basis, optionally only on the
/// controlled subspace. Discards trace out the target and return the wire to
/// |0>.
struct Gate {
  GateKind kind = GateKind::Unitary;
  std::string name;
  std::vector<int> targets;
  std::vector<int> controls;
  std::vector<std::uint8_t> control_values;
  Matrix matrix;

  static Gate named(const std::string& name, std::vector<int> targets,
                    std::vector<int> controls = {}, std::vector<std::uint8_t> values = {});
  static Gate custom(Matrix matrix, std::vector<int> targets, std::string name = "u");
  static Gate measure(int qubit);
  static Gate discard(int qubit);

  /// Prepends control qubits (with their required values) to this gate.
  Gate with_controls(const std::vector<int>& qubits, const std::vector<std::uint8_t>& values) const;
  /// Renames qubits through `mapping` (old index -> new index).
  Gate remapped(const std::vector<int>& mapping) const;
  Gate adjoint() const;

  /// True if the matrix is a 0/1 permutation matrix (classically evaluable).
  bool is_permutation() const;
  int max_qubit() const;

  bool same_as(const Gate& other, double tol = 1e-12) const;
};

/// Matrix for a named gate: i x y z h s sdg t tdg swap. Throws for unknown names.
Matrix named_gate_matrix(const std::string& name);
bool is_named_gate(const std::string& name);

bool is_unitary(const Matrix& m, double tol = 1e-10);

}  // namespace qlab
