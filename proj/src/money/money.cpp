#include "qlab/money/money.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "qlab/sim/errors.hpp"
#include "qlab/sim/pauli.hpp"
#include "qlab/sim/simulator.hpp"

namespace qlab {

bool MintRegistry::record(const std::string& serial) {
  std::lock_guard lock(mutex_);
  return serials_.insert(serial).second;
}

bool MintRegistry::issued(const std::string& serial) const {
  std::lock_guard lock(mutex_);
  return serials_.count(serial) != 0;
}

std::size_t MintRegistry::size() const {
  std::lock_guard lock(mutex_);
  return serials_.size();
}

MintRegistry& default_registry() {
  static MintRegistry registry;
  return registry;
}

QuantumCircuit reflection_circuit(const QuantumState& psi) {
  if (!psi.is_pure()) throw ContractError("reflection needs a pure state");
  const int n = psi.num_qubits();
  const auto& v = psi.amplitudes();
  Matrix m = Matrix::Identity(v.size(), v.size()) - 2.0 * v * v.adjoint();
  std::vector<int> targets(n);
  std::iota(targets.begin(), targets.end(), 0);
  QuantumCircuit c(n);
  c.unitary(std::move(m), std::move(targets), "refl");
  return c;
}

Bill mint(int n, const Obfuscator& obf, Rng& rng, MintRegistry& registry) {
  if (n < 1) throw DimensionError("note needs at least one qubit");
  if (n > kMaxNoteQubits) throw CapacityError("note wider than " + std::to_string(kMaxNoteQubits) + " qubits");
  auto psi = sample_random_state(n, rng);
  auto program = obf.obfuscate(reflection_circuit(psi), BitString::random(64, rng));
  std::string serial;
  do {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng()));
    serial = buf;
  } while (!registry.record(serial));
  return Bill(std::move(psi), std::move(program), std::move(serial));
}

Verification verify(ObfuscatedProgram& verifier, const QuantumState& candidate) {
  const int n = candidate.num_qubits();
  if (n != verifier.arity) throw DimensionError("candidate does not match verifier arity");
  QuantumCircuit hadamard(n + 1);
  hadamard.h(0);
  auto state = run_circuit(hadamard, QuantumState::zero(1).tensor(candidate));
  state = run_circuit(hadamard, interpret_controlled(verifier, state));
  std::vector<int> rest(n);
  std::iota(rest.begin(), rest.end(), 1);
  Verification out;
  const auto yes = project(state, {0}, BitString::from_string("1"));
  const auto no = project(state, {0}, BitString::from_string("0"));
  out.accept_probability = yes.probability;
  if (yes.state) out.accepted = reduce(*yes.state, rest);
  if (no.state) out.rejected = reduce(*no.state, rest);
  return out;
}

std::string to_string(ForgeStrategy s) {
  switch (s) {
    case ForgeStrategy::BasisProbe: return "basis-probe";
    case ForgeStrategy::OutOfBand: return "out-of-band";
  }
  return "?";
}

ForgeStrategy parse_forge_strategy(const std::string& name) {
  if (name == "basis-probe") return ForgeStrategy::BasisProbe;
  if (name == "out-of-band") return ForgeStrategy::OutOfBand;
  throw std::invalid_argument("unknown forge strategy: " + name);
}

ForgeResult counterfeit(CountingOracle& reflection, std::uint64_t q, ForgeStrategy strategy, Rng& rng,
                        const QuantumState* leaked) {
  const int n = reflection.arity();
  if (strategy == ForgeStrategy::OutOfBand) {
    if (!leaked) throw ContractError("out-of-band forger needs the leaked note");
    return {*leaked, reflection.query_count()};
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<std::uint64_t> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  // Any basis state is as good as any other before evidence arrives.
  std::vector<std::uint64_t> hits(dim, 0);
  std::uint64_t best = order[0];
  for (std::uint64_t i = 0; i < q; ++i) {
    const auto probe = order[i % dim];
    const auto answer = sample_measurement(reflection.apply(QuantumState::basis(n, probe)), all, rng).to_uint();
    if (answer == probe) continue;
    for (auto x : {probe, answer}) {
      if (++hits[x] > hits[best]) best = x;
    }
  }
  return {QuantumState::basis(n, best), reflection.query_count()};
}

}  // namespace qlab
