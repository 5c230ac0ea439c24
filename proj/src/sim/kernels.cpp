#include "kernels.hpp"

#include <unordered_set>

namespace qlab::detail {

GatePlan make_plan(const Gate& gate, int total, int offset) {
  GatePlan p;
  for (std::size_t i = 0; i < gate.controls.size(); ++i) {
    const auto b = bit_of(gate.controls[i] + offset, total);
    p.control_mask |= b;
    if (gate.control_values[i]) p.control_bits |= b;
  }
  for (int t : gate.targets) p.target_mask |= bit_of(t + offset, total);
  p.fixed_mask = p.control_mask | p.target_mask;
  const std::size_t k = gate.targets.size();
  p.offsets.assign(std::size_t{1} << k, 0);
  for (std::size_t j = 0; j < p.offsets.size(); ++j) {
    std::uint64_t off = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if ((j >> (k - 1 - t)) & 1U) off |= bit_of(gate.targets[t] + offset, total);
    }
    p.offsets[j] = off;
  }
  return p;
}

void apply_dense(Complex* data, int total, const GatePlan& plan, const Matrix& m) {
  const std::uint64_t dim = std::uint64_t{1} << total;
  const std::size_t k = plan.offsets.size();
  std::vector<Complex> in(k);
  // Enumerate every index whose fixed bits are zero, then set control bits.
  std::uint64_t free = 0;
  while (true) {
    const std::uint64_t base = free | plan.control_bits;
    for (std::size_t j = 0; j < k; ++j) in[j] = data[base | plan.offsets[j]];
    for (std::size_t r = 0; r < k; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < k; ++c) acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
      data[base | plan.offsets[r]] = acc;
    }
    free = ((free | plan.fixed_mask) + 1) & ~plan.fixed_mask;
    if (free == 0 || free >= dim) break;
  }
}

void apply_sparse(SparseAmps& amps, const GatePlan& plan, const Matrix& m) {
  SparseAmps out;
  out.reserve(amps.size() * 2);
  std::unordered_set<std::uint64_t> done;
  const std::size_t k = plan.offsets.size();
  std::vector<Complex> in(k);
  for (const auto& [idx, amp] : amps) {
    if ((idx & plan.control_mask) != plan.control_bits) {
      out[idx] += amp;
      continue;
    }
    const std::uint64_t base = idx & ~plan.target_mask;
    if (!done.insert(base).second) continue;
    for (std::size_t j = 0; j < k; ++j) {
      auto it = amps.find(base | plan.offsets[j]);
      in[j] = it == amps.end() ? Complex(0.0) : it->second;
    }
    for (std::size_t r = 0; r < k; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < k; ++c) acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
      if (std::norm(acc) > 1e-32) out[base | plan.offsets[r]] += acc;
    }
  }
  amps.swap(out);
}

}  // namespace qlab::detail
