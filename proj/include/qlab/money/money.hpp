#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <string>

#include "qlab/obf/program.hpp"
#include "qlab/sim/oracle.hpp"
#include "qlab/sim/state.hpp"

namespace qlab {

/// The reflection matrix is stored explicitly, so notes stay small.
inline constexpr int kMaxNoteQubits = 6;

/// A note with its published verifier. Move-only: there is no way to copy a
/// note through this type.
struct Bill {
  QuantumState note;
  ObfuscatedProgram verifier;
  std::string serial;

  Bill(QuantumState note, ObfuscatedProgram verifier, std::string serial)
      : note(std::move(note)), verifier(std::move(verifier)), serial(std::move(serial)) {}
  Bill(Bill&&) = default;
  Bill& operator=(Bill&&) = default;
  Bill(const Bill&) = delete;
  Bill& operator=(const Bill&) = delete;
};

/// Serials the bank has issued. Synchronized.
class MintRegistry {
 public:
  /// False when the serial was already issued.
  bool record(const std::string& serial);
  bool issued(const std::string& serial) const;
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::set<std::string> serials_;
};

MintRegistry& default_registry();

/// I - 2|psi><psi| as a single custom gate.
QuantumCircuit reflection_circuit(const QuantumState& psi);

/// Haar-random note plus an obfuscated reflection about it.
Bill mint(int n, const Obfuscator& obf, Rng& rng, MintRegistry& registry = default_registry());

struct Verification {
  double accept_probability = 0.0;
  /// Candidate register after an accepting run; empty if acceptance is impossible.
  std::optional<QuantumState> accepted;
  /// Candidate register after a rejecting run.
  std::optional<QuantumState> rejected;
};

/// Hadamard on a fresh ancilla, verifier controlled on it, Hadamard again;
/// accept when the ancilla reads 1. Consumes one use of the verifier.
Verification verify(ObfuscatedProgram& verifier, const QuantumState& candidate);

enum class ForgeStrategy {
  /// Probes basis states through the oracle in random order, measures each
  /// answer, and outputs the basis state that flipped most often.
  BasisProbe,
  /// Returns a leaked copy of the note; sanity check of the harness.
  OutOfBand,
};

std::string to_string(ForgeStrategy s);
ForgeStrategy parse_forge_strategy(const std::string& name);

struct ForgeResult {
  QuantumState clone;
  std::uint64_t queries = 0;
};

/// Runs a forger with `q` queries to the reflection oracle.
ForgeResult counterfeit(CountingOracle& reflection, std::uint64_t q, ForgeStrategy strategy, Rng& rng,
                        const QuantumState* leaked = nullptr);

}  // namespace qlab
