#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlab/sim/circuit.hpp"
#include "qlab/sim/state.hpp"

namespace qlab {

enum class ProgramForm { ClassicalDescription, QuantumState };

/// Output of an obfuscator: either a circuit description or an advice state,
/// plus the id of the public interpreter that runs it.
struct ObfuscatedProgram {
  ProgramForm form = ProgramForm::ClassicalDescription;
  std::string description;
  std::optional<QuantumState> state;
  int arity = 0;
  /// Empty means unlimited.
  std::optional<std::uint64_t> uses_remaining;
  std::string interpreter_id;

  /// Bytes of description, or qubits of the advice state.
  std::size_t size() const;
};

class Obfuscator {
 public:
  virtual ~Obfuscator() = default;
  virtual ObfuscatedProgram obfuscate(const QuantumCircuit& circuit, const BitString& randomness) const = 0;
  virtual std::string interpreter_id() const = 0;
};

/// Outputs the canonical description followed by a line recording the
/// randomness, so the output is a deterministic function of (circuit, r).
/// Gives correctness only, no hiding.
class PlainObfuscator : public Obfuscator {
 public:
  static constexpr const char* kInterpreterId = "plain-v1";

  explicit PlainObfuscator(std::optional<std::uint64_t> uses = std::nullopt) : uses_(uses) {}
  ObfuscatedProgram obfuscate(const QuantumCircuit& circuit, const BitString& randomness) const override;
  std::string interpreter_id() const override { return kInterpreterId; }

 private:
  std::optional<std::uint64_t> uses_;
};

ObfuscatedProgram plain_obfuscate(const QuantumCircuit& circuit, const BitString& randomness);

/// Parses a classical-description program back into its circuit.
QuantumCircuit program_circuit(const ObfuscatedProgram& program);

/// Runs the program on `input`, consuming one use.
QuantumState interpret(ObfuscatedProgram& program, const QuantumState& input, Rng* rng = nullptr);

/// Like interpret, but qubits past the program's arity form a side register
/// that passes through untouched and follows the program's outputs.
QuantumState interpret_with_side(ObfuscatedProgram& program, const QuantumState& input, Rng* rng = nullptr);

/// Runs the program with every gate conditioned on an extra leading control
/// qubit of `input`. Classical-description form only. Consumes one use.
QuantumState interpret_controlled(ObfuscatedProgram& program, const QuantumState& input);

/// Public list of circuits an advice state can select from. The interpreter
/// runs entry p when the advice register holds |p>.
struct Codebook {
  std::vector<QuantumCircuit> circuits;

  int advice_qubits() const;
  int arity() const;
  /// Advice-controlled dispatch over the entries; output drops the advice.
  QuantumCircuit interpreter_circuit() const;
  std::optional<std::size_t> index_of(const QuantumCircuit& circuit) const;
};

/// Process-wide, synchronized map from interpreter id to codebook.
void register_codebook(const std::string& id, Codebook codebook);
std::shared_ptr<const Codebook> find_codebook(const std::string& id);

/// Quantum-state form: the program is the basis advice state |index> of the
/// circuit in a registered codebook, with a finite number of uses.
class CodebookObfuscator : public Obfuscator {
 public:
  CodebookObfuscator(std::string id, Codebook codebook, std::optional<std::uint64_t> uses = 1);
  ObfuscatedProgram obfuscate(const QuantumCircuit& circuit, const BitString& randomness) const override;
  std::string interpreter_id() const override { return id_; }
  const Codebook& codebook() const { return *codebook_; }

 private:
  std::string id_;
  std::shared_ptr<const Codebook> codebook_;
  std::optional<std::uint64_t> uses_;
};

}  // namespace qlab
