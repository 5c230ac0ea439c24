#include "qlab/enc/obf_schemes.hpp"

#include <stdexcept>

#include "qlab/prf/ggm.hpp"
#include "qlab/sim/errors.hpp"
#include "qlab/sim/simulator.hpp"

namespace qlab {

namespace {

constexpr std::size_t kObfRandomnessBits = 32;

/// Splits the leading classical qubits off an interpreter output.
std::pair<BitString, QuantumState> read_classical(const QuantumState& out, int count) {
  auto split = split_basis(out, qubit_range(0, count));
  if (!split) throw ContractError("classical register left in superposition");
  return *split;
}

}  // namespace

ObfCpaScheme::ObfCpaScheme(std::shared_ptr<const Obfuscator> obf, int n) : obf_(std::move(obf)), n_(n) {
  if (n <= 0) throw std::invalid_argument("scheme needs n > 0");
}

BitString ObfCpaScheme::keygen(Rng& rng) const { return BitString::random(static_cast<std::size_t>(n_), rng); }

QuantumCircuit ObfCpaScheme::unlock_circuit(const PauliString& r, const BitString& key) const {
  if (key.size() != static_cast<std::size_t>(n_)) throw DimensionError("key length mismatch");
  QuantumCircuit c(2 * n_);
  std::vector<std::uint8_t> values(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) values[i] = key[i];
  append_pauli(c, r, qubit_range(n_, n_), true, qubit_range(0, n_), values);
  return c;
}

Ciphertext ObfCpaScheme::encrypt(const BitString& key, const QuantumState& state, Rng& rng) const {
  const auto r = PauliString::random(n_, rng);
  Ciphertext ct{BitString(), pauli_on_prefix(r, state, false), std::nullopt};
  ct.program = obf_->obfuscate(unlock_circuit(r, key), BitString::random(kObfRandomnessBits, rng));
  return ct;
}

QuantumState ObfCpaScheme::decrypt(const BitString& key, const Ciphertext& ct) const {
  if (!ct.program) throw ContractError("ciphertext carries no program");
  auto program = *ct.program;
  const auto out = interpret_with_side(program, QuantumState::basis(key).tensor(ct.payload));
  return read_classical(out, n_).second;
}

PkScheme::PkScheme(std::shared_ptr<const Obfuscator> obf, PrfScheme base) : obf_(std::move(obf)), base_(base) {}

QuantumCircuit PkScheme::enc_circuit(const BitString& sk) const {
  const int n = base_.message_qubits();
  QuantumCircuit c(2 * n);
  append_tag_controlled_pauli(c, base_.pad(sk), qubit_range(0, n), qubit_range(n, n), false);
  return c;
}

PkKeys PkScheme::keygen(Rng& rng) const {
  PkKeys k;
  k.sk = base_.keygen(rng);
  k.pk = obf_->obfuscate(enc_circuit(k.sk), BitString::random(kObfRandomnessBits, rng));
  return k;
}

Ciphertext PkScheme::encrypt(ObfuscatedProgram& pk, const QuantumState& state, Rng& rng) const {
  const int n = base_.message_qubits();
  const auto r = BitString::random(static_cast<std::size_t>(n), rng);
  auto [tag, payload] = read_classical(interpret_with_side(pk, QuantumState::basis(r).tensor(state)), n);
  return Ciphertext{tag, payload, std::nullopt};
}

QuantumState PkScheme::decrypt(const BitString& sk, const Ciphertext& ct) const { return base_.decrypt(sk, ct); }

HomEvalScheme::HomEvalScheme(std::shared_ptr<const Obfuscator> obf, PkScheme base)
    : obf_(std::move(obf)), base_(std::move(base)) {}

std::vector<HomGate> HomEvalScheme::alphabet() const {
  const int m = base_.message_qubits();
  std::vector<HomGate> out{{"i", {}}};
  for (const char* name : {"x", "z", "h", "s", "t"}) {
    for (int q = 0; q < m; ++q) out.push_back({name, {q}});
  }
  for (int c = 0; c < m; ++c) {
    for (int t = 0; t < m; ++t) {
      if (c != t) out.push_back({"cx", {c, t}});
    }
  }
  return out;
}

std::size_t HomEvalScheme::gate_index(const HomGate& gate) const {
  const auto alpha = alphabet();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i].name == gate.name && alpha[i].targets == gate.targets) return i;
  }
  const int m = base_.message_qubits();
  for (int q : gate.targets) {
    if (q < 0 || q >= m) throw std::out_of_range("gate target outside the payload");
  }
  throw std::invalid_argument("malformed gate description: " + gate.name);
}

int HomEvalScheme::gate_bits() const {
  int bits = 1;
  while ((std::size_t{1} << bits) < alphabet().size()) ++bits;
  return bits;
}

QuantumCircuit HomEvalScheme::eval_circuit(const BitString& sk) const {
  const int n = base_.message_qubits();
  const int gb = gate_bits();
  const auto tag = qubit_range(0, n);
  const auto greg = qubit_range(n, gb);
  const int p0 = n + gb;
  const auto payload = qubit_range(p0, n);
  const auto pad = base_.base().pad(sk);
  QuantumCircuit c(2 * n + gb);
  append_tag_controlled_pauli(c, pad, tag, payload, true);
  const auto alpha = alphabet();
  for (std::size_t g = 0; g < alpha.size(); ++g) {
    const auto ctl = value_bits(g, static_cast<std::size_t>(gb));
    const auto& d = alpha[g];
    if (d.name == "cx") {
      c.add(Gate::named("x", {p0 + d.targets[1]}, {p0 + d.targets[0]}).with_controls(greg, ctl));
    } else if (d.name != "i") {
      c.add(Gate::named(d.name, {p0 + d.targets[0]}, greg, ctl));
    }
    append_xor_constant(c, prf_derive(sk, static_cast<std::uint32_t>(g), static_cast<std::size_t>(n)), tag, greg, ctl);
  }
  append_tag_controlled_pauli(c, pad, tag, payload, false);
  return c;
}

HomKeys HomEvalScheme::keygen(Rng& rng) const {
  auto pk = base_.keygen(rng);
  HomKeys k{pk.sk, std::move(pk.pk), ObfuscatedProgram{}};
  k.eval = obf_->obfuscate(eval_circuit(k.sk), BitString::random(kObfRandomnessBits, rng));
  return k;
}

Ciphertext HomEvalScheme::encrypt(ObfuscatedProgram& pk, const QuantumState& state, Rng& rng) const {
  return base_.encrypt(pk, state, rng);
}

QuantumState HomEvalScheme::decrypt(const BitString& sk, const Ciphertext& ct) const { return base_.decrypt(sk, ct); }

Ciphertext HomEvalScheme::eval(ObfuscatedProgram& eval_key, const Ciphertext& ct, const HomGate& gate) const {
  const auto g = gate_index(gate);
  const int n = base_.message_qubits();
  const int gb = gate_bits();
  const auto head = ct.tag.concat(BitString::from_uint(g, static_cast<std::size_t>(gb)));
  const auto out = interpret_with_side(eval_key, QuantumState::basis(head).tensor(ct.payload));
  auto [classical, payload] = read_classical(out, n + gb);
  return Ciphertext{classical.slice(0, static_cast<std::size_t>(n)), payload, std::nullopt};
}

}  // namespace qlab
