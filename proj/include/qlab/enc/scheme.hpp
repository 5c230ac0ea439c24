#pragma once

#include <memory>
#include <optional>
#include <string>

#include "qlab/enc/circuits.hpp"
#include "qlab/obf/program.hpp"
#include "qlab/sim/pauli.hpp"
#include "qlab/sim/state.hpp"

namespace qlab {

/// Classical tag plus quantum payload. Payload qubits past the scheme's
/// message width are a side register carried along untouched.
struct Ciphertext {
  BitString tag;
  QuantumState payload;
  std::optional<ObfuscatedProgram> program;
};

/// Symmetric-key scheme over m-qubit messages. Encryption and decryption act
/// on the first m qubits of their input.
class SymScheme {
 public:
  virtual ~SymScheme() = default;
  virtual std::string name() const = 0;
  virtual int message_qubits() const = 0;
  virtual BitString keygen(Rng& rng) const = 0;
  virtual Ciphertext encrypt(const BitString& key, const QuantumState& state, Rng& rng) const = 0;
  virtual QuantumState decrypt(const BitString& key, const Ciphertext& ct) const = 0;
};

/// P_r rho P_r^dagger.
QuantumState qotp_encrypt(const PauliString& r, const QuantumState& rho);
QuantumState qotp_decrypt(const PauliString& r, const QuantumState& rho);

/// Pauli on the first r.num_qubits() qubits of a possibly larger state.
QuantumState pauli_on_prefix(const PauliString& r, const QuantumState& state, bool adjoint);

/// Tag r <- {0,1}^n, payload P_{f_k(r)} rho P_{f_k(r)}^dagger with f_k the
/// GGM function {0,1}^n -> {0,1}^{2n}. In ideal mode the key is a table of
/// 2^n uniformly random 2n-bit entries and f_k is a lookup.
class PrfScheme : public SymScheme {
 public:
  explicit PrfScheme(int n, bool ideal = false);
  std::string name() const override { return ideal_ ? "prf-ideal" : "prf"; }
  int message_qubits() const override { return n_; }
  BitString keygen(Rng& rng) const override;
  Ciphertext encrypt(const BitString& key, const QuantumState& state, Rng& rng) const override;
  QuantumState decrypt(const BitString& key, const Ciphertext& ct) const override;

  /// Encryption with caller-chosen randomness.
  Ciphertext encrypt_with(const BitString& key, const QuantumState& state, const BitString& r) const;
  PauliFunction pad(const BitString& key) const;
  bool ideal() const { return ideal_; }

 private:
  int n_;
  bool ideal_;
};

/// Deliberately broken: one fixed Pauli (the key), tag ignored.
class ConstantPauliScheme : public SymScheme {
 public:
  explicit ConstantPauliScheme(int m) : m_(m) {}
  std::string name() const override { return "constant-pauli"; }
  int message_qubits() const override { return m_; }
  BitString keygen(Rng& rng) const override;
  Ciphertext encrypt(const BitString& key, const QuantumState& state, Rng& rng) const override;
  QuantumState decrypt(const BitString& key, const Ciphertext& ct) const override;

 private:
  int m_;
};

}  // namespace qlab
