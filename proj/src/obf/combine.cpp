#include "qlab/obf/combine.hpp"

#include <algorithm>
#include <stdexcept>

#include "qlab/sim/errors.hpp"

namespace qlab {

int selector_bits(std::size_t k) {
  int bits = 1;
  while ((std::size_t{1} << bits) < k) ++bits;
  return bits;
}

CombinedCircuit combine(std::vector<QuantumCircuit> branches) {
  if (branches.size() < 2) throw std::invalid_argument("combine needs at least two branches");
  for (const auto& b : branches) {
    if (b.arity() != branches.front().arity()) throw DimensionError("combined branches must share one arity");
    if (b.outputs() != branches.front().outputs()) throw DimensionError("combined branches must share outputs");
  }
  CombinedCircuit out;
  out.selector_width = selector_bits(branches.size());
  out.branches = std::move(branches);
  return out;
}

QuantumCircuit CombinedCircuit::as_circuit() const {
  const int sel = selector_width;
  const int arity = input_arity();
  int ancillas = 0;
  for (const auto& b : branches) ancillas = std::max(ancillas, b.ancillas());
  QuantumCircuit c(sel + arity, ancillas);
  std::vector<int> selector(static_cast<std::size_t>(sel));
  for (int i = 0; i < sel; ++i) selector[static_cast<std::size_t>(i)] = i;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const auto& b = branches[i];
    std::vector<int> mapping(static_cast<std::size_t>(b.width()));
    for (int q = 0; q < b.width(); ++q) mapping[static_cast<std::size_t>(q)] = sel + q;
    std::vector<std::uint8_t> value(static_cast<std::size_t>(sel));
    for (int k = 0; k < sel; ++k) value[static_cast<std::size_t>(k)] = (i >> (sel - 1 - k)) & 1U;
    for (const auto& g : b.gates()) c.add(g.remapped(mapping).with_controls(selector, value));
  }
  std::vector<int> outs = selector;
  for (int q : branches.front().outputs()) outs.push_back(sel + q);
  c.set_outputs(outs);
  return c;
}

}  // namespace qlab
