#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qlab/obf/families.hpp"
#include "qlab/obf/program.hpp"
#include "qlab/sim/oracle.hpp"

namespace qlab {

struct AttackOutcome {
  int bit = 0;                      // 1 iff the main branch maps a to b
  std::uint64_t interpretations = 0;
};

/// Gate-by-gate homomorphic attack on an obfuscated main # E # Hom # B
/// program. Classical-description form needs one copy and reads the main
/// branch's gates from it. Quantum-state form needs two copies: the first is
/// run, the second supplies the advice state, and the gates come from the
/// public interpreter restricted to the main branch.
AttackOutcome adversary_homomorphic(std::vector<ObfuscatedProgram>& copies, const FamilyLayout& layout);

/// Interpretations the state-form attack spends on its first copy.
std::uint64_t state_attack_uses(const Codebook& codebook, const FamilyLayout& layout);

/// Alphabet indices of the main-branch gates, read from a classical program.
std::vector<std::size_t> main_branch_alphabet(const QuantumCircuit& family, const FamilyLayout& layout);

struct BaselineOutcome {
  int guess = 0;
  std::uint64_t queries = 0;
  std::uint64_t hits = 0;  // probes where an oracle acted nontrivially
};

/// Random-probe black-box simulator. Spends exactly q classical probes,
/// round-robin over the oracles. A nontrivial response from oracle 0 (the
/// main circuit) means it is the point circuit: guess 0. Without that
/// evidence the guess is a fair coin. `hint` forces oracle 0 probes to use
/// x = hint.
BaselineOutcome blackbox_baseline(std::vector<CountingOracle*> oracles, std::uint64_t q, Rng& rng,
                                  const std::optional<BitString>& hint = std::nullopt);

}  // namespace qlab
