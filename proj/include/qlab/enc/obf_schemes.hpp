#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qlab/enc/scheme.hpp"
#include "qlab/obf/program.hpp"

namespace qlab {

/// Key k in {0,1}^n. Enc samples r in {0,1}^{2n} and outputs P_r rho P_r^dagger
/// with an obfuscation of U'_{r,k}: P_r^dagger on y when x = k. Dec runs the
/// program on |k> (x) payload.
class ObfCpaScheme : public SymScheme {
 public:
  ObfCpaScheme(std::shared_ptr<const Obfuscator> obf, int n);
  std::string name() const override { return "obf-cpa"; }
  int message_qubits() const override { return n_; }
  BitString keygen(Rng& rng) const override;
  Ciphertext encrypt(const BitString& key, const QuantumState& state, Rng& rng) const override;
  QuantumState decrypt(const BitString& key, const Ciphertext& ct) const override;

  /// The point-conditional Pauli on 2n qubits.
  QuantumCircuit unlock_circuit(const PauliString& r, const BitString& key) const;

 private:
  std::shared_ptr<const Obfuscator> obf_;
  int n_;
};

struct PkKeys {
  BitString sk;
  ObfuscatedProgram pk;
};

/// Public key = obfuscated encryption circuit of the base scheme with the
/// secret key hard-wired and an explicit randomness register.
class PkScheme {
 public:
  PkScheme(std::shared_ptr<const Obfuscator> obf, PrfScheme base);
  int message_qubits() const { return base_.message_qubits(); }
  PkKeys keygen(Rng& rng) const;
  Ciphertext encrypt(ObfuscatedProgram& pk, const QuantumState& state, Rng& rng) const;
  QuantumState decrypt(const BitString& sk, const Ciphertext& ct) const;
  /// Inputs: n randomness qubits, then the m-qubit message.
  QuantumCircuit enc_circuit(const BitString& sk) const;
  const PrfScheme& base() const { return base_; }
  const Obfuscator& obfuscator() const { return *obf_; }

 private:
  std::shared_ptr<const Obfuscator> obf_;
  PrfScheme base_;
};

/// Gate description for homomorphic evaluation: one of x, z, h, s, t on one
/// qubit, or cx on two.
struct HomGate {
  std::string name;
  std::vector<int> targets;
};

struct HomKeys {
  BitString sk;
  ObfuscatedProgram pk;
  ObfuscatedProgram eval;
};

/// Evaluation key = obfuscation of decrypt, apply the described gate,
/// re-encrypt under a tag shifted by a PRF of the gate index.
class HomEvalScheme {
 public:
  HomEvalScheme(std::shared_ptr<const Obfuscator> obf, PkScheme base);
  HomKeys keygen(Rng& rng) const;
  Ciphertext encrypt(ObfuscatedProgram& pk, const QuantumState& state, Rng& rng) const;
  QuantumState decrypt(const BitString& sk, const Ciphertext& ct) const;
  Ciphertext eval(ObfuscatedProgram& eval_key, const Ciphertext& ct, const HomGate& gate) const;

  std::vector<HomGate> alphabet() const;
  /// Index of the gate in the alphabet; throws on malformed descriptions.
  std::size_t gate_index(const HomGate& gate) const;
  int gate_bits() const;
  /// Inputs: n tag qubits, gate register, then the payload.
  QuantumCircuit eval_circuit(const BitString& sk) const;

 private:
  std::shared_ptr<const Obfuscator> obf_;
  PkScheme base_;
};

}  // namespace qlab
