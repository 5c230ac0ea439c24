#pragma once

#include <cstdint>
#include <vector>

#include "qlab/enc/circuits.hpp"
#include "qlab/obf/combine.hpp"
#include "qlab/obf/program.hpp"
#include "qlab/sim/circuit.hpp"

namespace qlab {

/// |x, y> -> |x, y xor b> when x = a, identity otherwise (2n qubits).
QuantumCircuit make_point_circuit(const BitString& a, const BitString& b);
/// Same with a one-bit output register (n + 1 qubits).
QuantumCircuit make_point_circuit_bit(const BitString& a, bool b);

/// Input: m advice qubits for the codebook interpreter, then one output
/// qubit. Work ancillas hold |a>|0^n>; the interpreter runs on them, the
/// output flips when the work y register equals b, and the interpreter is
/// undone. With `expose_work` the work register is appended to the outputs.
QuantumCircuit make_checker_circuit(const BitString& a, const BitString& b, const Codebook& codebook,
                                    bool expose_work = false);

/// Register layout of the helper branches' input. Slots hold n-qubit
/// payloads, each with an n-bit classical tag; the gate register selects a
/// Hom alphabet entry or an Enc sub-flag.
struct FamilyLayout {
  int n = 0;
  int slots = 2;

  int gate_bits() const;
  int width() const { return 2 * slots * n + gate_bits(); }
  int payload(int slot, int i) const { return slot * n + i; }
  int tag(int slot, int i) const { return slots * n + slot * n + i; }
  int gate(int i) const { return 2 * slots * n + i; }
  std::vector<int> payload_qubits(int slot) const { return qubit_range(payload(slot, 0), n); }
  std::vector<int> tag_qubits(int slot) const { return qubit_range(tag(slot, 0), n); }
  std::vector<int> gate_qubits() const { return qubit_range(gate(0), gate_bits()); }

  /// Public gate alphabet the Hom branch can apply. Entry 0 is the no-op,
  /// then X on every payload qubit, then X on y_j (slot 1) controlled on
  /// x (slot 0) = v, and with three slots the same gates further controlled
  /// on slot 2's first qubit.
  std::vector<Gate> alphabet() const;
  /// Index of `g` in the alphabet, if present.
  std::optional<std::size_t> alphabet_index(const Gate& g) const;
};

/// Selector values of the combined family circuit.
enum class Branch : std::uint8_t { Main = 0, Enc = 1, Hom = 2, Check = 3 };
inline constexpr int kBranchSelectorBits = 2;

/// Enc sub-flags carried by the gate register.
inline constexpr std::uint64_t kEncFlagSecret = 0;  // encrypt a xor input
inline constexpr std::uint64_t kEncFlagPlain = 1;   // encrypt input

struct FamilySecret {
  BitString key;
  BitString a;
  BitString b;
  BitString r;  // E branch randomness
};

/// Tag re-randomization applied by Hom for alphabet entry g on slot s.
BitString hom_tag_shift(const BitString& key, std::uint64_t g, int slot, int n);

/// The three secret branches: E (Enc of a or of the input), Hom (decrypt,
/// apply an alphabet gate, re-randomize tags, re-encrypt) and B (outputs |a>
/// in slot 0 iff slot 1 decrypts to b). Each acts on the full layout width.
struct HelperBranches {
  QuantumCircuit enc;
  QuantumCircuit hom;
  QuantumCircuit check;
};
HelperBranches make_helper_branches(const FamilySecret& secret, const FamilyLayout& layout);

/// E # Hom # B on the family layout.
CombinedCircuit make_helper_family(const FamilySecret& secret, const FamilyLayout& layout);

/// Places a 2n-qubit circuit on (slot 0, slot 1) of the layout.
QuantumCircuit embed_main(const QuantumCircuit& main, const FamilyLayout& layout);

/// Full family circuit main # E # Hom # B.
CombinedCircuit make_family_circuit(const QuantumCircuit& main, const FamilySecret& secret, const FamilyLayout& layout);

struct UnobfSample {
  CombinedCircuit circuit;
  int secret = 0;  // 0: point circuit branch, 1: identity branch
  FamilySecret witness;
};

/// a, b are drawn uniformly from the nonzero n-bit strings.
UnobfSample sample_unobf_family(int n, Rng& rng, int slots = 2);
/// The same sample with the coin fixed by the caller.
UnobfSample sample_unobf_family(int n, int secret, Rng& rng, int slots = 2);

}  // namespace qlab
