#include "qlab/sim/oracle.hpp"

#include "qlab/sim/errors.hpp"
#include "qlab/sim/simulator.hpp"

namespace qlab {

CountingOracle::CountingOracle(QuantumCircuit hidden, std::optional<std::uint64_t> budget)
    : hidden_(std::move(hidden)), budget_(budget) {}

void CountingOracle::charge() {
  if (budget_ && queries_ >= *budget_) throw ContractError("oracle query budget exhausted");
  ++queries_;
}

QuantumState CountingOracle::apply(const QuantumState& state) {
  if (state.num_qubits() != hidden_.arity()) throw DimensionError("oracle input arity mismatch");
  charge();
  return run_circuit(hidden_, state);
}

std::uint64_t CountingOracle::apply_basis(std::uint64_t input) {
  if (hidden_.arity() < 64 && (input >> hidden_.arity()) != 0) throw DimensionError("oracle input out of range");
  charge();
  return run_basis(hidden_, input);
}

}  // namespace qlab
