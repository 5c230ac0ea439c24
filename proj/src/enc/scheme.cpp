#include "qlab/enc/scheme.hpp"

#include "qlab/prf/ggm.hpp"
#include "qlab/sim/errors.hpp"
#include "qlab/sim/simulator.hpp"

namespace qlab {

QuantumState qotp_encrypt(const PauliString& r, const QuantumState& rho) { return pauli_apply(r, rho); }

QuantumState qotp_decrypt(const PauliString& r, const QuantumState& rho) { return pauli_apply(r, rho, true); }

QuantumState pauli_on_prefix(const PauliString& r, const QuantumState& state, bool adjoint) {
  const int m = r.num_qubits();
  if (state.num_qubits() < m) throw DimensionError("state smaller than the Pauli string");
  QuantumCircuit c(state.num_qubits());
  append_pauli(c, r, qubit_range(0, m), adjoint);
  return run_circuit(c, state);
}

PrfScheme::PrfScheme(int n, bool ideal) : n_(n), ideal_(ideal) {
  if (n <= 0 || n > 10) throw std::invalid_argument("PRF scheme supports 1 <= n <= 10");
}

BitString PrfScheme::keygen(Rng& rng) const {
  const auto un = static_cast<std::size_t>(n_);
  return ideal_ ? BitString::random((std::size_t{1} << un) * 2 * un, rng) : BitString::random(un, rng);
}

PauliFunction PrfScheme::pad(const BitString& key) const {
  const auto un = static_cast<std::size_t>(n_);
  if (!ideal_) {
    if (key.size() != un) throw DimensionError("PRF scheme key length mismatch");
    return prf_pauli(key, n_);
  }
  if (key.size() != (std::size_t{1} << un) * 2 * un) throw DimensionError("random-function table size mismatch");
  return [key, un](const BitString& tag) { return PauliString(key.slice(tag.to_uint() * 2 * un, 2 * un)); };
}

Ciphertext PrfScheme::encrypt_with(const BitString& key, const QuantumState& state, const BitString& r) const {
  if (r.size() != static_cast<std::size_t>(n_)) throw DimensionError("encryption randomness length mismatch");
  return Ciphertext{r, pauli_on_prefix(pad(key)(r), state, false), std::nullopt};
}

Ciphertext PrfScheme::encrypt(const BitString& key, const QuantumState& state, Rng& rng) const {
  return encrypt_with(key, state, BitString::random(static_cast<std::size_t>(n_), rng));
}

QuantumState PrfScheme::decrypt(const BitString& key, const Ciphertext& ct) const {
  if (ct.tag.size() != static_cast<std::size_t>(n_)) throw DimensionError("ciphertext tag length mismatch");
  return pauli_on_prefix(pad(key)(ct.tag), ct.payload, true);
}

BitString ConstantPauliScheme::keygen(Rng& rng) const {
  return BitString::random(2 * static_cast<std::size_t>(m_), rng);
}

Ciphertext ConstantPauliScheme::encrypt(const BitString& key, const QuantumState& state, Rng&) const {
  return Ciphertext{BitString(), pauli_on_prefix(PauliString(key), state, false), std::nullopt};
}

QuantumState ConstantPauliScheme::decrypt(const BitString& key, const Ciphertext& ct) const {
  return pauli_on_prefix(PauliString(key), ct.payload, true);
}

}  // namespace qlab
