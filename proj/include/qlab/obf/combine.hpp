#pragma once

#include <vector>

#include "qlab/sim/circuit.hpp"

namespace qlab {

/// Selector-controlled dispatch: selector value i runs branch i on the shared
/// input register; values past the last branch act as the identity.
struct CombinedCircuit {
  int selector_width = 0;
  std::vector<QuantumCircuit> branches;

  int input_arity() const { return branches.front().arity(); }
  /// Selector qubits first, then the branch register.
  QuantumCircuit as_circuit() const;
};

/// Requires at least two branches of equal arity and equal output lists.
CombinedCircuit combine(std::vector<QuantumCircuit> branches);

/// Bits needed to index k items (at least 1).
int selector_bits(std::size_t k);

}  // namespace qlab
