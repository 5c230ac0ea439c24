#include "qlab/obf/attack.hpp"

#include <stdexcept>

#include "qlab/sim/errors.hpp"
#include "qlab/sim/simulator.hpp"

namespace qlab {

namespace {

/// The attacker's view: plaintext-or-ciphertext payloads of every slot plus
/// the classical tags.
struct Registers {
  QuantumState payload;
  std::vector<BitString> tags;
};

class FamilyQuery {
 public:
  FamilyQuery(ObfuscatedProgram& program, const FamilyLayout& layout) : program_(program), layout_(layout) {}

  Registers operator()(Branch branch, const Registers& in, std::uint64_t gate_value) {
    const int sel = kBranchSelectorBits;
    const int n = layout_.n;
    const auto gb = static_cast<std::size_t>(layout_.gate_bits());
    BitString classical = BitString::from_uint(static_cast<std::uint64_t>(branch), sel);
    const auto head = QuantumState::basis(classical);
    BitString tail;
    for (const auto& t : in.tags) tail = tail.concat(t);
    tail = tail.concat(BitString::from_uint(gate_value, gb));
    const auto input = head.tensor(in.payload).tensor(QuantumState::basis(tail));
    const auto out = interpret(program_, input);
    ++calls_;
    std::vector<int> fixed = qubit_range(0, sel);
    const auto rest = qubit_range(sel + layout_.slots * n, layout_.slots * n + static_cast<int>(gb));
    fixed.insert(fixed.end(), rest.begin(), rest.end());
    auto split = split_basis(out, fixed);
    if (!split) throw ContractError("program output left a classical register in superposition");
    Registers r{split->second, {}};
    for (int s = 0; s < layout_.slots; ++s) {
      r.tags.push_back(split->first.slice(static_cast<std::size_t>(sel + s * n), static_cast<std::size_t>(n)));
    }
    return r;
  }

  std::uint64_t calls() const { return calls_; }

 private:
  ObfuscatedProgram& program_;
  const FamilyLayout& layout_;
  std::uint64_t calls_ = 0;
};

Registers fresh(const FamilyLayout& layout) {
  return {QuantumState::zero(layout.slots * layout.n),
          std::vector<BitString>(static_cast<std::size_t>(layout.slots), BitString(static_cast<std::size_t>(layout.n)))};
}

/// Reduced state of one slot's payload.
QuantumState slot_state(const Registers& r, const FamilyLayout& layout, int slot) {
  return reduce(r.payload, layout.payload_qubits(slot));
}

/// Product of per-slot states, slot 0 first.
QuantumState join(const std::vector<QuantumState>& parts) {
  QuantumState s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s = s.tensor(parts[i]);
  return s;
}

/// Strips the leading selector controls of a gate that carries `prefix`
/// values on qubits [first, first + prefix.size()), and shifts the rest.
std::optional<Gate> strip_prefix(const Gate& g, int first, const std::vector<std::uint8_t>& prefix, int shift,
                                 std::size_t keep_leading) {
  const std::size_t k = prefix.size();
  if (g.controls.size() < keep_leading + k) return std::nullopt;
  for (std::size_t i = 0; i < k; ++i) {
    if (g.controls[keep_leading + i] != first + static_cast<int>(i) || g.control_values[keep_leading + i] != prefix[i]) {
      return std::nullopt;
    }
  }
  Gate out = g;
  out.controls.erase(out.controls.begin() + static_cast<std::ptrdiff_t>(keep_leading),
                     out.controls.begin() + static_cast<std::ptrdiff_t>(keep_leading + k));
  out.control_values.erase(out.control_values.begin() + static_cast<std::ptrdiff_t>(keep_leading),
                           out.control_values.begin() + static_cast<std::ptrdiff_t>(keep_leading + k));
  for (auto& q : out.targets) q -= shift;
  for (std::size_t i = keep_leading; i < out.controls.size(); ++i) out.controls[i] -= shift;
  return out;
}

/// Runs the Hom gate list, then B, on ciphertexts of (a, 0) and extra slots.
AttackOutcome finish(FamilyQuery& query, const FamilyLayout& layout, Registers regs,
                     const std::vector<std::size_t>& gates) {
  for (auto g : gates) regs = query(Branch::Hom, regs, g);
  // B: slot 0 in the clear at |0>, slot 1 the evaluated ciphertext of y.
  std::vector<QuantumState> parts{QuantumState::zero(layout.n), slot_state(regs, layout, 1)};
  for (int s = 2; s < layout.slots; ++s) parts.push_back(QuantumState::zero(layout.n));
  Registers in{join(parts), regs.tags};
  in.tags[0] = BitString(static_cast<std::size_t>(layout.n));
  const auto out = query(Branch::Check, in, 0);
  const auto probs = slot_state(out, layout, 0).probabilities();
  AttackOutcome result;
  result.bit = probs(0) < 0.5 ? 1 : 0;
  result.interpretations = query.calls();
  return result;
}

}  // namespace

std::vector<std::size_t> main_branch_alphabet(const QuantumCircuit& family, const FamilyLayout& layout) {
  const auto prefix = value_bits(static_cast<std::uint64_t>(Branch::Main), kBranchSelectorBits);
  std::vector<std::size_t> out;
  for (const auto& g : family.gates()) {
    const auto stripped = strip_prefix(g, 0, prefix, kBranchSelectorBits, 0);
    if (!stripped) continue;
    const auto idx = layout.alphabet_index(*stripped);
    if (!idx) throw std::invalid_argument("main branch gate outside the public alphabet");
    out.push_back(*idx);
  }
  return out;
}

std::uint64_t state_attack_uses(const Codebook& codebook, const FamilyLayout& layout) {
  (void)layout;
  const auto j = codebook.interpreter_circuit();
  const int m = codebook.advice_qubits();
  const auto prefix = value_bits(static_cast<std::uint64_t>(Branch::Main), kBranchSelectorBits);
  std::uint64_t gates = 0;
  for (const auto& g : j.gates()) gates += strip_prefix(g, m, prefix, 0, static_cast<std::size_t>(m)).has_value();
  return 2 + static_cast<std::uint64_t>(m) + gates + 1;
}

AttackOutcome adversary_homomorphic(std::vector<ObfuscatedProgram>& copies, const FamilyLayout& layout) {
  if (copies.empty()) throw ContractError("attack needs at least one program copy");
  auto& program = copies.front();
  const int sel = kBranchSelectorBits;
  if (program.arity != sel + layout.width()) throw DimensionError("program does not match the family layout");
  FamilyQuery query(program, layout);

  if (program.form == ProgramForm::ClassicalDescription) {
    const auto gates = main_branch_alphabet(program_circuit(program), layout);
    const auto enc_a = query(Branch::Enc, fresh(layout), kEncFlagSecret);
    const auto enc_0 = query(Branch::Enc, fresh(layout), kEncFlagPlain);
    std::vector<QuantumState> parts{slot_state(enc_a, layout, 0), slot_state(enc_0, layout, 0)};
    for (int s = 2; s < layout.slots; ++s) parts.push_back(QuantumState::zero(layout.n));
    Registers regs{join(parts), fresh(layout).tags};
    regs.tags[0] = enc_a.tags[0];
    regs.tags[1] = enc_0.tags[0];
    return finish(query, layout, std::move(regs), gates);
  }

  // Quantum-state form: the main branch is only reachable through the public
  // interpreter, whose advice-controlled gates are evaluated under Hom.
  if (copies.size() < 2) throw ContractError("state-form attack needs two program copies");
  if (layout.slots != 3) throw std::invalid_argument("state-form attack needs a three-slot layout");
  const auto book = find_codebook(program.interpreter_id);
  if (!book) throw ContractError("unknown interpreter id: " + program.interpreter_id);
  const int m = book->advice_qubits();
  if (m != 1) throw std::invalid_argument("state-form attack supports one advice qubit");
  const auto needed = state_attack_uses(*book, layout);
  if (program.uses_remaining && *program.uses_remaining < needed) {
    throw ContractError("program copy has too few uses for the attack");
  }
  auto& advice_copy = copies[1];
  if (advice_copy.form != ProgramForm::QuantumState || advice_copy.interpreter_id != program.interpreter_id) {
    throw ContractError("second copy must be an advice state for the same interpreter");
  }

  // Interpreter gates restricted to the main branch, advice qubit mapped to
  // slot 2's first payload qubit.
  const auto j = book->interpreter_circuit();
  const auto prefix = value_bits(static_cast<std::uint64_t>(Branch::Main), kBranchSelectorBits);
  std::vector<std::size_t> gates;
  for (const auto& g : j.gates()) {
    auto stripped = strip_prefix(g, m, prefix, m + sel, static_cast<std::size_t>(m));
    if (!stripped) continue;
    for (int i = 0; i < m; ++i) stripped->controls[static_cast<std::size_t>(i)] = layout.payload(2, i);
    const auto idx = layout.alphabet_index(*stripped);
    if (!idx) throw std::invalid_argument("interpreter gate outside the public alphabet");
    gates.push_back(*idx);
  }

  const auto enc_a = query(Branch::Enc, fresh(layout), kEncFlagSecret);
  const auto enc_0 = query(Branch::Enc, fresh(layout), kEncFlagPlain);
  Registers adv_in = fresh(layout);
  std::vector<QuantumState> adv_parts{advice_copy.state->tensor(QuantumState::zero(layout.n - m)),
                                      QuantumState::zero(layout.n), QuantumState::zero(layout.n)};
  adv_in.payload = join(adv_parts);
  advice_copy.state.reset();
  advice_copy.uses_remaining = 0;
  const auto enc_adv = query(Branch::Enc, adv_in, kEncFlagPlain);
  std::vector<QuantumState> parts{slot_state(enc_a, layout, 0), slot_state(enc_0, layout, 0),
                                  slot_state(enc_adv, layout, 0)};
  Registers regs{join(parts), {enc_a.tags[0], enc_0.tags[0], enc_adv.tags[0]}};
  return finish(query, layout, std::move(regs), gates);
}

BaselineOutcome blackbox_baseline(std::vector<CountingOracle*> oracles, std::uint64_t q, Rng& rng,
                                  const std::optional<BitString>& hint) {
  if (oracles.empty()) throw std::invalid_argument("baseline needs at least one oracle");
  BaselineOutcome out;
  bool main_moved = false;
  for (std::uint64_t i = 0; i < q; ++i) {
    const std::size_t which = i % oracles.size();
    auto* o = oracles[which];
    const int arity = o->arity();
    std::uint64_t input = BitString::random(static_cast<std::size_t>(arity), rng).to_uint();
    if (which == 0 && hint) {
      const int half = arity - static_cast<int>(hint->size());
      input = (hint->to_uint() << half) | (input & ((std::uint64_t{1} << half) - 1));
    }
    const auto before = o->query_count();
    const auto output = o->apply_basis(input);
    if (o->query_count() != before + 1) throw ContractError("oracle miscounted a probe");
    if (output != input) {
      ++out.hits;
      if (which == 0) main_moved = true;
    }
    ++out.queries;
  }
  out.guess = main_moved ? 0 : static_cast<int>(rng() & 1U);
  return out;
}

}  // namespace qlab
