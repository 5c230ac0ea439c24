#pragma once

#include <cstdint>
#include <optional>

#include "qlab/sim/circuit.hpp"
#include "qlab/sim/state.hpp"

namespace qlab {

/// Forward-only, query-counted access to a hidden circuit. The circuit itself
/// is never exposed. Single owner: the counter is not synchronized.
class CountingOracle {
 public:
  explicit CountingOracle(QuantumCircuit hidden, std::optional<std::uint64_t> budget = std::nullopt);

  QuantumState apply(const QuantumState& state);
  /// Basis-state query for permutation circuits; counts as one query.
  std::uint64_t apply_basis(std::uint64_t input);

  int arity() const { return hidden_.arity(); }
  std::uint64_t query_count() const { return queries_; }
  std::optional<std::uint64_t> budget() const { return budget_; }

 private:
  void charge();

  QuantumCircuit hidden_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t queries_ = 0;
};

}  // namespace qlab
