#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qlab/sim/gate.hpp"

namespace qlab::detail {

/// Bit layout of one gate on a register of `total` qubits, with gate qubit q
/// placed at register qubit q + offset.
struct GatePlan {
  std::uint64_t fixed_mask = 0;     // target and control bits
  std::uint64_t control_mask = 0;
  std::uint64_t control_bits = 0;   // required values of the control bits
  std::uint64_t target_mask = 0;
  std::vector<std::uint64_t> offsets;  // index offset for each target pattern
};

GatePlan make_plan(const Gate& gate, int total, int offset = 0);

inline std::uint64_t bit_of(int qubit, int total) { return std::uint64_t{1} << (total - 1 - qubit); }

/// data <- (controlled) matrix applied in place on a 2^total vector.
void apply_dense(Complex* data, int total, const GatePlan& plan, const Matrix& m);

using SparseAmps = std::unordered_map<std::uint64_t, Complex>;

void apply_sparse(SparseAmps& amps, const GatePlan& plan, const Matrix& m);

}  // namespace qlab::detail
